#include "brauerkit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace brauerkit {

namespace {

struct Token {
    enum class Kind { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& s, int line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Int, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Var, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Kind::Plus, "+", col}); break;
            case '-': out.push_back({Token::Kind::Minus, "-", col}); break;
            case '*': out.push_back({Token::Kind::Star, "*", col}); break;
            case '^': out.push_back({Token::Kind::Caret, "^", col}); break;
            case '(': out.push_back({Token::Kind::LParen, "(", col}); break;
            case ')': out.push_back({Token::Kind::RParen, ")", col}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        ++i;
    }
    out.push_back({Token::Kind::End, "", static_cast<int>(s.size())});
    return out;
}

class PolyParser {
public:
    PolyParser(std::vector<Token> toks, RingPtr ring, int line)
        : toks_(std::move(toks)), ring_(std::move(ring)), line_(line) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        if (cur().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + cur().text + "'", line_, cur().col);
        return p;
    }

private:
    std::vector<Token> toks_;
    RingPtr ring_;
    int line_;
    size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    MultiPoly expr() {
        bool neg = false;
        if (cur().kind == Token::Kind::Minus) {
            neg = true;
            advance();
        }
        MultiPoly p = term();
        if (neg) p = -p;
        while (cur().kind == Token::Kind::Plus || cur().kind == Token::Kind::Minus) {
            bool minus = cur().kind == Token::Kind::Minus;
            advance();
            MultiPoly q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    bool starts_factor() const {
        switch (cur().kind) {
            case Token::Kind::Int:
            case Token::Kind::Var:
            case Token::Kind::LParen: return true;
            default: return false;
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (true) {
            if (cur().kind == Token::Kind::Star) {
                advance();
                p = p * factor();
            } else if (starts_factor()) {
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    int parse_exponent() {
        advance();  // consume '^'
        bool neg = false;
        if (cur().kind == Token::Kind::Minus) {
            neg = true;
            advance();
        }
        if (cur().kind != Token::Kind::Int)
            throw ParseError("expected an integer exponent", line_, cur().col);
        long e = std::stol(cur().text);
        advance();
        return static_cast<int>(neg ? -e : e);
    }

    MultiPoly factor() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Kind::Minus: {
                advance();
                return -factor();
            }
            case Token::Kind::Int: {
                Int n(t.text);
                advance();
                const Ring& sc = ring_->kind() == RingKind::Quotient
                                     ? *ring_->poly_ring()->base()
                                     : *ring_->base();
                return MultiPoly::constant(ring_, scalar_from_int(n, sc));
            }
            case Token::Kind::Var: {
                int vi = ring_->var_index(t.text);
                if (vi < 0)
                    throw ParseError("unknown variable '" + t.text + "'", line_, t.col);
                int vcol = t.col;
                advance();
                int e = 1;
                if (cur().kind == Token::Kind::Caret) e = parse_exponent();
                if (e < 0 && vi != ring_->laurent_var())
                    throw ParseError("negative exponent on non-Laurent variable '" + t.text + "'",
                                     line_, vcol);
                return MultiPoly::variable(ring_, static_cast<size_t>(vi), e);
            }
            case Token::Kind::LParen: {
                advance();
                MultiPoly p = expr();
                if (cur().kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", line_, cur().col);
                advance();
                if (cur().kind == Token::Kind::Caret) {
                    int e = parse_exponent();
                    if (e < 0) throw ParseError("negative exponent on a parenthesized expression",
                                                line_, cur().col);
                    p = p.pow(static_cast<unsigned>(e));
                }
                return p;
            }
            default:
                throw ParseError(t.kind == Token::Kind::End ? "empty polynomial"
                                                            : "unexpected token '" + t.text + "'",
                                 line_, t.kind == Token::Kind::End ? 0 : t.col);
        }
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const RingPtr& ring, int line) {
    if (ring->is_scalar_kind()) throw PreconditionError("parse_poly: need a Poly ring");
    return PolyParser(tokenize(text, line), ring, line).parse();
}

int JobSpec::effective_order() const {
    if (order > 0) return order;
    long long n = 1;
    for (int i = 0; i < hmax; ++i) n *= static_cast<long long>(prime ? prime : 2);
    return static_cast<int>(n) + 1;
}

JobSpec parse_job(const std::string& document) {
    JobSpec job;
    bool kind_set = false;
    std::istringstream in(document);
    std::string raw;
    int lineno = 0;
    auto split_words = [](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream ws(s);
        std::string w;
        while (ws >> w) out.push_back(w);
        return out;
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = s.find_last_not_of(" \t\r");
        s = s.substr(b, e - b + 1);
        size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value'", lineno, static_cast<int>(b) + 1);
        std::string key = s.substr(0, colon);
        std::string val = s.substr(colon + 1);
        size_t kb = key.find_last_not_of(" \t");
        key = key.substr(0, kb + 1);
        size_t vb = val.find_first_not_of(" \t");
        val = vb == std::string::npos ? "" : val.substr(vb);
        auto need_int = [&](const std::string& v) {
            try {
                size_t used = 0;
                long n = std::stol(v, &used);
                if (used != v.size()) throw std::invalid_argument("");
                return n;
            } catch (...) {
                throw ParseError("expected an integer value for '" + key + "'", lineno,
                                 static_cast<int>(colon) + 2);
            }
        };
        if (key == "kind") {
            if (val == "complete_intersection") job.kind = JobSpec::Kind::CompleteIntersection;
            else if (val == "double_plane") job.kind = JobSpec::Kind::DoublePlane;
            else if (val == "elliptic_weierstrass") job.kind = JobSpec::Kind::EllipticWeierstrass;
            else throw ParseError("unknown kind '" + val + "'", lineno, static_cast<int>(colon) + 2);
            kind_set = true;
        } else if (key == "prime") {
            job.prime = static_cast<unsigned long>(need_int(val));
        } else if (key == "precision") {
            job.precision = static_cast<int>(need_int(val));
        } else if (key == "order") {
            job.order = static_cast<int>(need_int(val));
        } else if (key == "hmax") {
            job.hmax = static_cast<int>(need_int(val));
        } else if (key == "vars") {
            job.vars = split_words(val);
        } else if (key == "params") {
            job.params = split_words(val);
        } else if (key == "poly") {
            if (val.empty()) throw ParseError("empty polynomial", lineno, 0);
            job.polys.push_back(val);
        } else if (key == "a1" || key == "a2" || key == "a3" || key == "a4" || key == "a6") {
            job.weierstrass[key[1] - '0'] = val;
        } else if (key == "outputs") {
            job.outputs = split_words(val);
            for (const auto& o : job.outputs)
                if (o != "log" && o != "fgl" && o != "p_series" && o != "height" &&
                    o != "landweber")
                    throw ParseError("unknown output '" + o + "'", lineno,
                                     static_cast<int>(colon) + 2);
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, static_cast<int>(b) + 1);
        }
    }
    if (!kind_set) throw ParseError("missing 'kind'", lineno ? lineno : 1, 1);
    bool needs_height = std::find(job.outputs.begin(), job.outputs.end(), "height") !=
                            job.outputs.end() ||
                        std::find(job.outputs.begin(), job.outputs.end(), "landweber") !=
                            job.outputs.end();
    if (needs_height && job.prime != 0 && job.order > 0) {
        long long need = 1;
        for (int i = 0; i < job.hmax; ++i) need *= static_cast<long long>(job.prime);
        if (job.order <= need)
            throw ParseError("order must exceed prime^hmax for height/landweber outputs",
                             lineno ? lineno : 1, 1);
    }
    return job;
}

}  // namespace brauerkit
