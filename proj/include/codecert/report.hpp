#pragma once

#include "codecert/rational.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace codecert::cli {

struct ReportCheck {
    std::string name;  // a machine key, no spaces
    bool pass = false;
    std::string detail;
};

/// One CLI run. Printed twice: a human section ("key: value" lines and
/// tables) and a machine section of "key=value" lines after a "--" line.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<std::pair<std::string, std::string>> details;  // machine section only, the rows of table
    std::vector<std::string> table;  // human section only
    std::vector<ReportCheck> checks;
    std::vector<std::string> notes;  // e.g. the worker count; not part of the result

    void input(std::string key, std::string value);
    void result(std::string key, std::string value);
    /// Adds key=p/q and key.decimal=<30 digits>.
    void result(const std::string& key, const Rational& value);
    void detail(std::string key, std::string value);
    void check(std::string name, bool pass, std::string detail = {});

    /// Conjunction of all checks; a run without checks passes.
    bool pass() const;
};

void print_human(std::ostream& out, const RunReport& r);
void print_machine(std::ostream& out, const RunReport& r);
void print_report(std::ostream& out, const RunReport& r);

/// Parses the machine section of printed output back into key/value pairs.
std::vector<std::pair<std::string, std::string>> parse_machine(const std::string& text);

}  // namespace codecert::cli
