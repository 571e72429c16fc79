#include "dirseq/io.hpp"

#include <algorithm>
#include <sstream>

namespace dirseq {

namespace {

// Strips comments, returns whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

long long to_int(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail("ParseError", std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
}

BigInt to_bigint(const std::string& tok, const char* what) {
    try {
        return BigInt(tok);
    } catch (const std::exception&) {
        fail("ParseError", std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

std::string write_halfperiod(const HalfPeriod& seq) {
    std::ostringstream os;
    os << "N=" << seq.size() << " H=" << seq.length() << "\n";
    std::size_t width = 0;
    for (const Row& r : seq.rows())
        for (Label p : r) width = std::max(width, std::to_string(p).size());
    for (const Row& r : seq.rows()) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::string cell = std::to_string(r[i]);
            os << (i ? " " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        os << "\n";
    }
    return os.str();
}

HalfPeriod read_halfperiod(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.size() < 2 || tokens[0].rfind("N=", 0) != 0 || tokens[1].rfind("H=", 0) != 0)
        fail("ParseError", "halfperiod file must start with 'N=<int> H=<int>'");
    const int n = static_cast<int>(to_int(tokens[0].substr(2), "N"));
    const int h = static_cast<int>(to_int(tokens[1].substr(2), "H"));
    if (n < 2 || h < 1) fail("ParseError", "need N >= 2 and H >= 1");
    const std::size_t expected = static_cast<std::size_t>(n) * (static_cast<std::size_t>(h) + 1);
    if (tokens.size() - 2 != expected)
        fail("ParseError", "expected " + std::to_string(expected) + " labels, got " +
                               std::to_string(tokens.size() - 2));
    std::vector<Row> rows(static_cast<std::size_t>(h) + 1, Row(static_cast<std::size_t>(n)));
    std::size_t at = 2;
    for (auto& row : rows)
        for (auto& cell : row) cell = static_cast<Label>(to_int(tokens[at++], "label"));
    return validated(rows);
}

HalfPeriod parse_halfperiod(const std::string& text) {
    std::istringstream is(text);
    return read_halfperiod(is);
}

std::string write_configuration(const Configuration& cfg) {
    std::ostringstream os;
    os << "D = " << cfg.disc << "\n";
    os << "points = " << cfg.size() << "\n";
    for (const Point& p : cfg.points) {
        for (const FieldScalar* c : {&p.x, &p.y}) {
            os << boost::multiprecision::numerator(c->rational_part()) << " "
               << boost::multiprecision::denominator(c->rational_part()) << " "
               << boost::multiprecision::numerator(c->surd_part()) << " "
               << boost::multiprecision::denominator(c->surd_part());
            os << (c == &p.x ? "   " : "\n");
        }
    }
    return os.str();
}

Configuration read_configuration(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.size() < 6 || tokens[0] != "D" || tokens[1] != "=")
        fail("ParseError", "configuration file must start with 'D = <int>'");
    const int disc = static_cast<int>(to_int(tokens[2], "D"));
    if (tokens[3] != "points" || tokens[4] != "=")
        fail("ParseError", "expected 'points = <int>'");
    const long long count = to_int(tokens[5], "points");
    if (count < 1) fail("ParseError", "need at least one point");
    const std::size_t expected = static_cast<std::size_t>(count) * 8;
    if (tokens.size() - 6 != expected)
        fail("ParseError", "expected " + std::to_string(expected) + " coordinate integers, got " +
                               std::to_string(tokens.size() - 6));
    std::vector<Point> pts;
    std::size_t at = 6;
    auto scalar = [&]() {
        BigInt an = to_bigint(tokens[at++], "numerator");
        BigInt ad = to_bigint(tokens[at++], "denominator");
        BigInt bn = to_bigint(tokens[at++], "numerator");
        BigInt bd = to_bigint(tokens[at++], "denominator");
        if (ad == 0 || bd == 0) fail("ParseError", "zero denominator");
        return FieldScalar(Rational(an, ad), Rational(bn, bd), disc);
    };
    for (long long i = 0; i < count; ++i) {
        FieldScalar x = scalar();
        FieldScalar y = scalar();
        pts.push_back({std::move(x), std::move(y)});
    }
    return Configuration(disc, std::move(pts));
}

Configuration parse_configuration(const std::string& text) {
    std::istringstream is(text);
    return read_configuration(is);
}

}  // namespace dirseq
