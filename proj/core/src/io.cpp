#include "levrecon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace levrecon::io {

using nlohmann::json;

std::string batch_to_json(const OutputBatch& batch, int indent) {
    json doc;
    doc["n"] = batch.n;
    doc["t"] = batch.t;
    doc["model"] = to_string(batch.model);
    if (batch.source) doc["source"] = batch.source->to_string();
    json outputs = json::array();
    for (const Word& w : batch.outputs) outputs.push_back(w.to_string());
    doc["outputs"] = std::move(outputs);
    return doc.dump(indent);
}

OutputBatch batch_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw precondition_error(std::string("invalid batch JSON: ") + err.what());
    }
    OutputBatch batch;
    try {
        batch.n = doc.at("n").get<int>();
        batch.t = doc.at("t").get<int>();
        batch.model = channel_model_from_string(doc.at("model").get<std::string>());
        if (doc.contains("source") && !doc["source"].is_null())
            batch.source = Word::from_string(doc["source"].get<std::string>());
        for (const auto& entry : doc.at("outputs")) batch.outputs.push_back(Word::from_string(entry.get<std::string>()));
    } catch (const json::exception& err) {
        throw precondition_error(std::string("invalid batch JSON: ") + err.what());
    }
    for (const Word& w : batch.outputs)
        if (w.length() != batch.n) throw precondition_error("batch output length differs from n");
    if (batch.source && batch.source->length() != batch.n)
        throw precondition_error("batch source length differs from n");
    return batch;
}

namespace {

json words_to_json(const std::vector<Word>& words) {
    json arr = json::array();
    for (const Word& w : words) arr.push_back(w.to_string());
    return arr;
}

} // namespace

std::string candidates_to_json(const CandidateList& list, int indent) {
    json doc;
    doc["decoder"] = to_string(list.decoder);
    doc["candidates"] = words_to_json(list.candidates);
    if (const auto* cert = std::get_if<ShatterCertificate>(&list.certificate)) {
        doc["certificate"] = {{"S", cert->shattered.indices()},
                              {"beta", words_to_json(cert->betas)},
                              {"radius", cert->search_radius}};
    } else if (const auto* cov = std::get_if<CoveringCertificate>(&list.certificate)) {
        doc["certificate"] = {{"S", cov->window.indices()},
                              {"coset_syndrome", cov->coset_syndrome},
                              {"coset", words_to_json(cov->coset_words)},
                              {"beta", words_to_json(cov->betas)}};
    } else if (const auto* bu = std::get_if<BallUnionCertificate>(&list.certificate)) {
        doc["certificate"] = {{"centers", words_to_json(bu->centers)}, {"radius", bu->radius}};
    }
    return doc.dump(indent);
}

std::string verified_decode_to_json(const VerifiedDecode& outcome, const MajorityResult& vote, int indent) {
    json doc;
    doc["z"] = outcome.z.to_string();
    doc["m"] = vote.minority_counts;
    switch (outcome.outcome) {
        case VerifiedDecode::Outcome::UniqueVerified:
            doc["outcome"] = "unique_verified";
            doc["word"] = outcome.unique->to_string();
            break;
        case VerifiedDecode::Outcome::ListVerified:
            doc["outcome"] = "list_verified";
            doc["list"] = words_to_json(outcome.list);
            break;
        case VerifiedDecode::Outcome::Unverified: doc["outcome"] = "unverified"; break;
    }
    if (outcome.k) doc["k"] = *outcome.k;
    return doc.dump(indent);
}

namespace {

std::vector<Word> read_word_lines(std::istream& in, int& declared_n, int& declared_d) {
    declared_n = -1;
    declared_d = -1;
    std::vector<Word> words;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (first && line.find("n=") == 0) {
            std::istringstream header(line);
            std::string token;
            while (header >> token) {
                if (token.rfind("n=", 0) == 0) declared_n = std::stoi(token.substr(2));
                if (token.rfind("d=", 0) == 0) declared_d = std::stoi(token.substr(2));
            }
            first = false;
            continue;
        }
        first = false;
        words.push_back(Word::from_string(line));
    }
    if (words.empty()) throw precondition_error("file contains no words");
    for (const Word& w : words)
        if (declared_n >= 0 && w.length() != declared_n) throw precondition_error("word length differs from header n");
    return words;
}

} // namespace

Code read_code(std::istream& in) {
    int declared_n = -1, declared_d = -1;
    std::vector<Word> words = read_word_lines(in, declared_n, declared_d);
    const int n = declared_n >= 0 ? declared_n : words.front().length();
    Code code(n, std::move(words));
    if (declared_d >= 0 && code.size() >= 2 && code.min_distance() != declared_d)
        throw precondition_error("declared minimum distance does not match the codewords");
    return code;
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path);
    return read_code(in);
}

void write_code(const Code& code, std::ostream& out) {
    out << "n=" << code.length();
    if (code.size() >= 2) out << " d=" << code.min_distance();
    out << '\n';
    for (const Word& w : code.codewords()) out << w.to_string() << '\n';
}

void write_code_file(const Code& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot open " + path);
    write_code(code, out);
}

LinearCode read_generator(std::istream& in) {
    int declared_n = -1, declared_d = -1;
    std::vector<Word> rows = read_word_lines(in, declared_n, declared_d);
    const int n = declared_n >= 0 ? declared_n : rows.front().length();
    return LinearCode(n, std::move(rows));
}

LinearCode read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path);
    return read_generator(in);
}

void write_generator(const LinearCode& code, std::ostream& out) {
    out << "n=" << code.length() << '\n';
    for (const Word& row : code.generators()) out << row.to_string() << '\n';
}

void write_generator_file(const LinearCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot open " + path);
    write_generator(code, out);
}

} // namespace levrecon::io
