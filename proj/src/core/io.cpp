#include "polysparse/io.hpp"

#include <fstream>
#include <sstream>

namespace polysparse {

namespace {

std::vector<std::string> tokenize(std::string_view text)
{
    std::vector<std::string> tokens;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream words(line);
        std::string w;
        while (words >> w)
            tokens.push_back(w);
    }
    return tokens;
}

std::size_t parse_count(const std::string& tok, const char* what)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0)
            throw ParseError("");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid ") + what + " '" + tok + "'");
    }
}

Rational parse_number(const std::string& tok)
{
    try {
        return parse_rational(tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

struct Header {
    std::size_t dim;
    std::size_t rows;
};

Header parse_header(const std::vector<std::string>& tokens, const char* tag)
{
    if (tokens.size() < 3 || tokens[0] != tag)
        throw ParseError(std::string("expected header '") + tag + " <dim> <rows>'");
    Header h{parse_count(tokens[1], "dimension"), parse_count(tokens[2], "row count")};
    if (h.dim == 0)
        throw ParseError("dimension must be positive");
    return h;
}

} // namespace

std::string format_hpoly(const HPolytope& p)
{
    std::string out = "H " + std::to_string(p.dim) + " " + std::to_string(p.ineqs.size()) + "\n";
    for (const auto& row : p.ineqs)
        out += to_string(row.a) + " <= " + to_string(row.b) + "\n";
    return out;
}

std::string format_vpoly(const VPolytope& v)
{
    std::string out = "V " + std::to_string(v.dim) + " " + std::to_string(v.vertices.size()) + "\n";
    for (const auto& x : v.vertices)
        out += to_string(x) + "\n";
    return out;
}

HPolytope parse_hpoly(std::string_view text)
{
    const auto tokens = tokenize(text);
    const auto h = parse_header(tokens, "H");
    if (tokens.size() != 3 + h.rows * (h.dim + 2))
        throw ParseError("expected " + std::to_string(h.rows) + " rows of " + std::to_string(h.dim) +
                         " coefficients, '<=' and a bound");
    HPolytope p(h.dim);
    std::size_t t = 3;
    for (std::size_t r = 0; r < h.rows; ++r) {
        LinIneq row{QVector(h.dim), 0};
        for (std::size_t j = 0; j < h.dim; ++j)
            row.a[j] = parse_number(tokens[t++]);
        if (tokens[t++] != "<=")
            throw ParseError("row " + std::to_string(r + 1) + ": expected '<='");
        row.b = parse_number(tokens[t++]);
        p.ineqs.push_back(std::move(row));
    }
    return p;
}

VPolytope parse_vpoly(std::string_view text)
{
    const auto tokens = tokenize(text);
    const auto h = parse_header(tokens, "V");
    if (tokens.size() != 3 + h.rows * h.dim)
        throw ParseError("expected " + std::to_string(h.rows) + " points of dimension " + std::to_string(h.dim));
    VPolytope v(h.dim);
    std::size_t t = 3;
    for (std::size_t r = 0; r < h.rows; ++r) {
        QVector x(h.dim);
        for (std::size_t j = 0; j < h.dim; ++j)
            x[j] = parse_number(tokens[t++]);
        v.vertices.push_back(std::move(x));
    }
    return v;
}

namespace {

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

HPolytope read_hpoly(const std::filesystem::path& path)
{
    return parse_hpoly(slurp(path));
}

VPolytope read_vpoly(const std::filesystem::path& path)
{
    return parse_vpoly(slurp(path));
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

} // namespace polysparse
