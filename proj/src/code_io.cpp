#include "codecert/code_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace codecert {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}

namespace {

std::string strip(std::string s) {
    if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

}  // namespace

Code read_code(std::istream& in, const std::string& source) {
    std::string raw;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::vector<Word> words;
    std::unordered_set<std::uint64_t> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        if (n == 0) {
            if (line.rfind("n=", 0) != 0) throw ParseError(source, line_no, "expected header 'n=<int>'");
            try {
                std::size_t used = 0;
                const unsigned long value = std::stoul(line.substr(2), &used);
                if (used != line.size() - 2) throw std::invalid_argument("trailing characters");
                n = value;
            } catch (const std::exception&) {
                throw ParseError(source, line_no, "malformed length in header");
            }
            if (n == 0 || n > Word::kMaxLength) throw ParseError(source, line_no, "length must be in 1..64");
            continue;
        }
        if (line.size() != n) throw ParseError(source, line_no, "word has length " + std::to_string(line.size()) + ", expected " + std::to_string(n));
        Word w;
        try {
            w = Word::from_string(line);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, line_no, e.what());
        }
        if (!seen.insert(w.bits()).second) throw ParseError(source, line_no, "duplicate word " + line);
        words.push_back(w);
    }
    if (n == 0) throw ParseError(source, line_no, "missing header 'n=<int>'");
    return Code(n, std::move(words));
}

Code read_code_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return read_code(in, path.string());
}

void write_code(std::ostream& out, const Code& c) {
    out << "n=" << c.length() << '\n';
    for (const Word& w : c) out << w.to_string() << '\n';
}

void write_code_file(const std::filesystem::path& path, const Code& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_code(out, c);
}

}  // namespace codecert
