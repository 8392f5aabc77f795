#include "apolar/system_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "apolar/errors.hpp"
#include "apolar/parser.hpp"

namespace apolar {

namespace {

struct FileLine {
    std::size_t number;   // 1-based line in the file
    std::size_t indent;   // columns stripped from the front
    std::string text;     // comment-free, trimmed
};

std::vector<FileLine> significant_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::vector<FileLine> lines;
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::size_t begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = raw.find_last_not_of(" \t\r");
        lines.push_back({number, begin, raw.substr(begin, end - begin + 1)});
    }
    return lines;
}

// Rethrows parse errors with the file position attached.
template <typename Fn>
auto at_line(const FileLine& line, Fn&& fn) {
    try {
        return fn();
    } catch (const UnknownVariable& e) {
        throw SyntaxError(std::string(e.what()), line.indent + 1, line.number);
    } catch (const SyntaxError& e) {
        if (e.line()) throw;
        throw SyntaxError(std::string(e.what()), line.indent + e.position(), line.number);
    }
}

}  // namespace

PolynomialSystem load_system(const std::string& path) {
    std::vector<FileLine> lines = significant_lines(path);
    if (lines.empty()) throw SyntaxError("empty system file '" + path + "'", 1, 1);

    const FileLine& header = lines[0];
    if (header.text.rfind("vars:", 0) != 0)
        throw SyntaxError("expected 'vars:' header in '" + path + "'", header.indent + 1,
                          header.number);

    std::vector<std::string> vars;
    std::istringstream names(header.text.substr(5));
    for (std::string name; names >> name;) vars.push_back(name);
    at_line(header, [&] { validate_var_names(vars); return 0; });

    std::vector<Polynomial> polys;
    for (std::size_t i = 1; i < lines.size(); ++i)
        polys.push_back(at_line(lines[i], [&] { return parse_poly(lines[i].text, vars); }));
    if (polys.empty())
        throw SyntaxError("no polynomials after the header in '" + path + "'", 1, header.number);

    return PolynomialSystem::make(std::move(vars), std::move(polys));
}

std::vector<Point> load_roots(const std::string& path, std::size_t nvars) {
    std::vector<Point> points;
    for (const FileLine& line : significant_lines(path)) {
        Point p = at_line(line, [&] { return parse_point(line.text); });
        if (p.size() != nvars)
            throw ShapeMismatch("line " + std::to_string(line.number) + " of '" + path + "' has " +
                                std::to_string(p.size()) + " coordinates, expected " +
                                std::to_string(nvars));
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace apolar
