#include "codecert/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace codecert::cli {

void RunReport::input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }

void RunReport::result(std::string key, std::string value) { results.emplace_back(std::move(key), std::move(value)); }

void RunReport::result(const std::string& key, const Rational& value) {
    result(key, to_string(value));
    result(key + ".decimal", to_decimal(value, 30));
}

void RunReport::detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }

void RunReport::check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

bool RunReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

void print_human(std::ostream& out, const RunReport& r) {
    out << "command: " << r.command << '\n';
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    if (!r.inputs.empty()) {
        out << "inputs:\n";
        for (const auto& [k, v] : r.inputs) out << "  " << k << ": " << v << '\n';
    }
    if (!r.results.empty()) {
        out << "results:\n";
        for (const auto& [k, v] : r.results) out << "  " << k << ": " << v << '\n';
    }
    for (const auto& line : r.table) out << line << '\n';
    if (!r.checks.empty()) {
        out << "checks:\n";
        for (const auto& c : r.checks) {
            out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ')';
            out << '\n';
        }
    }
    out << "pass: " << (r.pass() ? "yes" : "no") << '\n';
}

void print_machine(std::ostream& out, const RunReport& r) {
    out << "command=" << r.command << '\n';
    for (const auto& n : r.notes) out << "note=" << n << '\n';
    for (const auto& [k, v] : r.inputs) out << "input." << k << '=' << v << '\n';
    for (const auto& [k, v] : r.results) out << k << '=' << v << '\n';
    for (const auto& [k, v] : r.details) out << k << '=' << v << '\n';
    for (const auto& c : r.checks) out << "check." << c.name << '=' << (c.pass ? "pass" : "fail") << '\n';
    out << "pass=" << (r.pass() ? "true" : "false") << '\n';
}

void print_report(std::ostream& out, const RunReport& r) {
    print_human(out, r);
    out << "--\n";
    print_machine(out, r);
}

std::vector<std::pair<std::string, std::string>> parse_machine(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    bool machine = false;
    while (std::getline(in, line)) {
        if (line == "--") {
            machine = true;
            out.clear();
            continue;
        }
        if (!machine) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
}

}  // namespace codecert::cli
