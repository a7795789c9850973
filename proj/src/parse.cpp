#include "hbtrace/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <utility>

#include "hbtrace/errors.hpp"

namespace hbtrace {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    char next() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) next();
    }

    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
    }

    std::string found() const {
        if (done()) return ", found end of input";
        return std::string(", found '") + peek() + "'";
    }

    std::string identifier() {
        skip_space();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable" + found());
        std::string out;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += next();
        return out;
    }

    std::uint64_t unsigned_integer(std::uint64_t max) {
        skip_space();
        if (peek() == '-') fail("negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer" + found());
        const std::size_t l = line_, c = column_;
        std::uint64_t value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(next() - '0');
            if (value > max) throw ParseError("integer too large", l, c);
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct RawFactor {
    std::string name;
    Exponent exponent;
    std::size_t line, column;
};
using RawMonomial = std::vector<RawFactor>;

// nullopt for the literal 0.
std::optional<RawMonomial> raw_monomial(Cursor& cur) {
    cur.skip_space();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        const std::size_t l = cur.line(), c = cur.column();
        const auto v = cur.unsigned_integer(std::numeric_limits<Exponent>::max());
        if (v == 0) return std::nullopt;
        if (v != 1) throw ParseError("coefficients are not allowed; only 0 and 1 may appear as constants", l, c);
        return RawMonomial{};
    }
    RawMonomial out;
    do {
        cur.skip_space();
        const std::size_t l = cur.line(), c = cur.column();
        auto name = cur.identifier();
        Exponent e = 1;
        if (cur.accept('^')) e = static_cast<Exponent>(cur.unsigned_integer(std::numeric_limits<Exponent>::max()));
        out.push_back({std::move(name), e, l, c});
    } while (cur.accept('*'));
    return out;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, const RingPtr& declared) {
    Cursor cur(text);
    cur.skip_space();
    if (cur.done()) cur.fail("empty input");
    const bool parens = cur.accept('(');
    std::vector<std::optional<RawMonomial>> raws;
    do {
        raws.push_back(raw_monomial(cur));
    } while (cur.accept(','));
    if (parens) cur.expect(')');
    cur.skip_space();
    if (!cur.done()) cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");

    RingPtr ring = declared;
    if (!ring) {
        std::vector<std::string> names;
        for (const auto& r : raws)
            if (r)
                for (const auto& f : *r)
                    if (std::find(names.begin(), names.end(), f.name) == names.end()) names.push_back(f.name);
        ring = make_ring(std::move(names));
    }
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < raws.size(); ++k) {
        if (!raws[k]) continue;
        Monomial u(ring->size());
        for (const auto& f : *raws[k]) {
            const std::size_t i = ring->index_of(f.name);
            if (i == ring->size()) throw ParseError("unknown variable '" + f.name + "'", f.line, f.column);
            if (u[i] > std::numeric_limits<Exponent>::max() - f.exponent)
                throw ParseError("exponent overflow", f.line, f.column);
            u[i] += f.exponent;
        }
        gens.push_back(std::move(u));
    }
    return MonomialIdeal(std::move(ring), std::move(gens));
}

std::vector<std::string> parse_name_list(std::string_view text) {
    Cursor cur(text);
    std::vector<std::string> out;
    cur.skip_space();
    while (!cur.done()) {
        const std::size_t l = cur.line(), c = cur.column();
        auto name = cur.identifier();
        if (std::find(out.begin(), out.end(), name) != out.end())
            throw ParseError("variable '" + name + "' declared twice", l, c);
        out.push_back(std::move(name));
        cur.accept(',');
        cur.skip_space();
    }
    return out;
}

Monomial parse_exponent_vector(std::string_view text, std::size_t n) {
    Cursor cur(text);
    std::vector<Exponent> exps;
    do {
        exps.push_back(static_cast<Exponent>(cur.unsigned_integer(std::numeric_limits<Exponent>::max())));
    } while (cur.accept(','));
    cur.skip_space();
    if (!cur.done()) cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
    if (exps.size() != n)
        throw ParseError("expected " + std::to_string(n) + " exponents, got " + std::to_string(exps.size()), 1, 1);
    return Monomial(std::move(exps));
}

EdgeSequenceData parse_graph_spec(std::string_view text) {
    struct Record {
        std::uint64_t v[4];
        std::size_t line, column;
        std::size_t field_column[4];
    };
    std::vector<Record> records;
    std::size_t line = 1;
    std::size_t start = 0;
    std::size_t line_start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find_first_of("\n;", start);
        if (end == std::string_view::npos) end = text.size();
        auto chunk = text.substr(start, end - start);
        if (auto hash = chunk.find('#'); hash != std::string_view::npos) chunk = chunk.substr(0, hash);
        const std::size_t column = start - line_start + 1;
        if (chunk.find_first_not_of(" \t\r") != std::string_view::npos) {
            Cursor cur(chunk);
            Record r{{}, line, column, {}};
            for (std::size_t f = 0; f < 4; ++f) {
                cur.skip_space();
                r.field_column[f] = column + cur.column() - 1;
                if (cur.peek() == '-') throw ParseError("values must be positive", line, r.field_column[f]);
                r.v[f] = cur.unsigned_integer(std::numeric_limits<Exponent>::max());
            }
            cur.skip_space();
            if (!cur.done()) throw ParseError("expected four integers \"i j a b\"", line, column + cur.column() - 1);
            for (std::size_t f = 0; f < 4; ++f)
                if (r.v[f] == 0) throw ParseError("values must be positive", line, r.field_column[f]);
            if (r.v[0] == r.v[1]) throw ParseError("loop at vertex " + std::to_string(r.v[0]), line, column);
            records.push_back(r);
        }
        if (end < text.size() && text[end] == '\n') {
            ++line;
            line_start = end + 1;
        }
        start = end + 1;
    }
    if (records.empty()) throw ParseError("no edges given", 1, 1);

    std::uint64_t n = 0;
    for (const auto& r : records) n = std::max({n, r.v[0], r.v[1]});
    EdgeSequenceData data{make_indexed_ring(n), {}};
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& r : records) {
        std::size_t i = r.v[0] - 1, j = r.v[1] - 1;
        auto a = static_cast<Exponent>(r.v[2]), b = static_cast<Exponent>(r.v[3]);
        if (i > j) {
            std::swap(i, j);
            std::swap(a, b);
        }
        if (!seen.emplace(i, j).second)
            throw ParseError("duplicate edge {" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + "}",
                             r.line, r.column);
        data.edges.push_back({i, j, a, b});
    }
    data.validate();
    return data;
}

}  // namespace hbtrace
