#ifndef LEVRECON_IO_HPP
#define LEVRECON_IO_HPP

#include <iosfwd>
#include <string>

#include "levrecon/channels.hpp"
#include "levrecon/codes.hpp"
#include "levrecon/majority.hpp"
#include "levrecon/reconstruct.hpp"

namespace levrecon::io {

/// {"n":…, "t":…, "model":…, "source":"0101…", "outputs":["…", …]}
std::string batch_to_json(const OutputBatch& batch, int indent = 2);
OutputBatch batch_from_json(const std::string& text);

/// Candidate list with its certificate (coordinate sets as sorted 1-based
/// index arrays, words as 0/1 strings).
std::string candidates_to_json(const CandidateList& list, int indent = 2);

std::string verified_decode_to_json(const VerifiedDecode& outcome, const MajorityResult& vote, int indent = 2);

/// Code files: one 0/1 word per line; optional first line "n=<int> d=<int>".
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(const Code& code, std::ostream& out);
void write_code_file(const Code& code, const std::string& path);

/// Generator files use the same line format (rows of the generator matrix).
LinearCode read_generator(std::istream& in);
LinearCode read_generator_file(const std::string& path);
void write_generator(const LinearCode& code, std::ostream& out);
void write_generator_file(const LinearCode& code, const std::string& path);

} // namespace levrecon::io

#endif
