#pragma once

#include "codecert/code.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace codecert {

/// Malformed input file. The CLI maps this to exit status 3.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what);
};

// Code text format:
//   n=<length>
//   <binary string of length n>     one word per line
// '#' starts a comment; blank lines are ignored; a repeated word is an error.

Code read_code(std::istream& in, const std::string& source = "<stream>");
Code read_code_file(const std::filesystem::path& path);

/// Writes words in ascending lexicographic order.
void write_code(std::ostream& out, const Code& c);
void write_code_file(const std::filesystem::path& path, const Code& c);

}  // namespace codecert
