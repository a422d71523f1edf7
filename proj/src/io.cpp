#include "nambu/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos; // 1-based column
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t pos = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Num, src.substr(i, j - i), pos});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), pos});
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        out.push_back({kind, std::string(1, c), pos});
        ++i;
    }
    out.push_back({Tok::End, "", src.size() + 1});
    return out;
}

class Parser {
public:
    Parser(const std::string& src, const VarTable& vars)
        : vars_(vars), tokens_(tokenize(src)) {}

    ExprValue run() {
        ExprValue v = expr();
        expect(Tok::End, "trailing input");
        return v;
    }

private:
    const VarTable& vars_;
    std::vector<Token> tokens_;
    std::size_t cur_ = 0;

    const Token& peek() const { return tokens_[cur_]; }
    Token take() { return tokens_[cur_++]; }
    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) throw ParseError("expected " + what, peek().pos);
        ++cur_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, peek().pos);
    }

    int nvars() const { return vars_.nvars(); }

    static bool value_is_zero(const ExprValue& v) {
        return std::visit([](const auto& x) { return x.is_zero(); }, v);
    }

    ExprValue negate(ExprValue v) {
        return std::visit([](auto& x) -> ExprValue { return -x; }, v);
    }

    ExprValue add(ExprValue a, ExprValue b, std::size_t pos) {
        if (std::holds_alternative<Poly>(a) && std::get<Poly>(a).is_zero()) return b;
        if (std::holds_alternative<Poly>(b) && std::get<Poly>(b).is_zero()) return a;
        if (a.index() != b.index()) throw ParseError("cannot add values of different kinds", pos);
        if (std::holds_alternative<Poly>(a))
            return std::get<Poly>(a) + std::get<Poly>(b);
        if (std::holds_alternative<MultiVec>(a)) {
            auto& x = std::get<MultiVec>(a);
            auto& y = std::get<MultiVec>(b);
            if (x.degree() != y.degree()) {
                if (x.is_zero()) return y;
                if (y.is_zero()) return x;
                throw ParseError("cannot add tensors of different degrees", pos);
            }
            return x + y;
        }
        auto& x = std::get<DiffForm>(a);
        auto& y = std::get<DiffForm>(b);
        if (x.degree() != y.degree()) {
            if (x.is_zero()) return y;
            if (y.is_zero()) return x;
            throw ParseError("cannot add tensors of different degrees", pos);
        }
        return x + y;
    }

    ExprValue mul(ExprValue a, ExprValue b, std::size_t pos) {
        if (std::holds_alternative<Poly>(a) && std::holds_alternative<Poly>(b))
            return std::get<Poly>(a) * std::get<Poly>(b);
        if (std::holds_alternative<Poly>(a)) {
            const Poly& f = std::get<Poly>(a);
            if (std::holds_alternative<MultiVec>(b)) return std::get<MultiVec>(b) * f;
            return std::get<DiffForm>(b) * f;
        }
        if (std::holds_alternative<Poly>(b)) {
            const Poly& f = std::get<Poly>(b);
            if (std::holds_alternative<MultiVec>(a)) return std::get<MultiVec>(a) * f;
            return std::get<DiffForm>(a) * f;
        }
        throw ParseError("cannot '*' two tensors; use '^' for the wedge product", pos);
    }

    ExprValue divide(ExprValue a, ExprValue b, std::size_t pos) {
        if (!std::holds_alternative<Poly>(b) || !std::get<Poly>(b).is_constant() ||
            std::get<Poly>(b).is_zero())
            throw ParseError("division only by nonzero constants", pos);
        const Rat c = std::get<Poly>(b).constant_term();
        return std::visit([&](auto& x) -> ExprValue { return x * (Rat(1) / c); }, a);
    }

    ExprValue power(ExprValue a, ExprValue b, std::size_t pos) {
        if (std::holds_alternative<MultiVec>(a) && std::holds_alternative<MultiVec>(b))
            return wedge(std::get<MultiVec>(a), std::get<MultiVec>(b));
        if (std::holds_alternative<DiffForm>(a) && std::holds_alternative<DiffForm>(b))
            return wedge(std::get<DiffForm>(a), std::get<DiffForm>(b));
        if (std::holds_alternative<Poly>(a) && std::holds_alternative<Poly>(b)) {
            const Poly& e = std::get<Poly>(b);
            if (!e.is_constant()) throw ParseError("exponent must be a constant", pos);
            const Rat c = e.constant_term();
            if (c.get_den() != 1 || sgn(c) < 0)
                throw ParseError("exponent must be a non-negative integer", pos);
            return std::get<Poly>(a).pow(static_cast<unsigned>(c.get_num().get_ui()));
        }
        throw ParseError("'^' joins two scalars (power) or two tensors of the same kind (wedge)",
                         pos);
    }

    ExprValue expr() {
        bool neg = false;
        if (peek().kind == Tok::Plus) take();
        else if (peek().kind == Tok::Minus) {
            take();
            neg = true;
        }
        ExprValue v = term();
        if (neg) v = negate(std::move(v));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = take();
            ExprValue rhs = term();
            if (op.kind == Tok::Minus) rhs = negate(std::move(rhs));
            v = add(std::move(v), std::move(rhs), op.pos);
        }
        return v;
    }

    ExprValue term() {
        ExprValue v = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token op = take();
            ExprValue rhs = factor();
            v = op.kind == Tok::Star ? mul(std::move(v), std::move(rhs), op.pos)
                                     : divide(std::move(v), std::move(rhs), op.pos);
        }
        return v;
    }

    ExprValue factor() {
        ExprValue v = atom();
        while (peek().kind == Tok::Caret) {
            const Token op = take();
            ExprValue rhs = atom();
            v = power(std::move(v), std::move(rhs), op.pos);
        }
        return v;
    }

    ExprValue atom() {
        const Token t = peek();
        if (t.kind == Tok::Num) {
            take();
            return Poly::constant(nvars(), Rat(mpz_class(t.text)));
        }
        if (t.kind == Tok::LParen) {
            take();
            ExprValue v = expr();
            expect(Tok::RParen, "')'");
            return v;
        }
        if (t.kind == Tok::Minus) {
            take();
            return negate(atom());
        }
        if (t.kind != Tok::Ident) fail("expected a value");
        take();
        const std::string& name = t.text;
        // declared variable names win over basis spellings
        if (int v = vars_.find(name); v >= 0) return Poly::variable(nvars(), v);
        if (name.size() >= 2 && name[0] == 'e' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const int k = std::stoi(name.substr(1));
            if (k < 1 || k > nvars())
                throw ParseError("basis vector index out of range: " + name, t.pos);
            return MultiVec::basis(nvars(), {k - 1});
        }
        if (name.size() >= 2 && name[0] == 'd') {
            if (int v = vars_.find(name.substr(1)); v >= 0)
                return DiffForm::basis(nvars(), {v});
        }
        throw ParseError("unknown identifier '" + name + "'", t.pos);
    }
};

} // namespace

ExprValue parse_expression(const std::string& src, const VarTable& vars) {
    return Parser(src, vars).run();
}

Poly parse_poly(const std::string& src, const VarTable& vars) {
    ExprValue v = parse_expression(src, vars);
    if (!std::holds_alternative<Poly>(v))
        throw ParseError("expected a polynomial, got a tensor", 1);
    return std::get<Poly>(v);
}

MultiVec parse_multivec(const std::string& src, const VarTable& vars) {
    ExprValue v = parse_expression(src, vars);
    if (std::holds_alternative<MultiVec>(v)) return std::get<MultiVec>(v);
    if (std::holds_alternative<Poly>(v)) return MultiVec::scalar(std::get<Poly>(v));
    throw ParseError("expected a multivector, got a differential form", 1);
}

DiffForm parse_form(const std::string& src, const VarTable& vars) {
    ExprValue v = parse_expression(src, vars);
    if (std::holds_alternative<DiffForm>(v)) return std::get<DiffForm>(v);
    if (std::holds_alternative<Poly>(v)) return DiffForm::scalar(std::get<Poly>(v));
    throw ParseError("expected a differential form, got a multivector", 1);
}

VarTable infer_vars(const std::vector<std::string>& sources) {
    VarTable vars;
    for (const std::string& src : sources)
        for (const Token& t : tokenize(src)) {
            if (t.kind != Tok::Ident) continue;
            if (t.text.size() >= 2 && t.text[0] == 'e' &&
                std::all_of(t.text.begin() + 1, t.text.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw ParseError("tensor input needs explicit --vars", t.pos);
            if (vars.find(t.text) < 0) vars.names.push_back(t.text);
        }
    if (vars.names.empty()) throw ParseError("no variables found; pass --vars", 1);
    return vars;
}

RatMat parse_ratmat(const std::string& src) {
    std::vector<std::vector<Rat>> rows;
    std::size_t i = 0;
    auto parse_entry = [&](const std::string& s) {
        std::string t;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty()) throw ParseError("empty matrix entry", i + 1);
        try {
            Rat r(t);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational entry '" + t + "'", i + 1);
        }
    };
    std::vector<Rat> row;
    std::string cur;
    for (i = 0; i <= src.size(); ++i) {
        const char c = i < src.size() ? src[i] : ';';
        if (c == ',' || c == ';') {
            row.push_back(parse_entry(cur));
            cur.clear();
            if (c == ';') {
                rows.push_back(std::move(row));
                row.clear();
            }
        } else {
            cur += c;
        }
        if (i == src.size()) break;
    }
    if (rows.empty()) throw ParseError("empty matrix", 1);
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw ParseError("ragged matrix rows", 1);
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(ncols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

std::string mono_str(const Expo& e, const VarTable& vars) {
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.names[v];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

namespace {

// term with leading sign pulled out: returns (is_negative, body)
std::pair<bool, std::string> term_str(const Expo& e, const Rat& c, const VarTable& vars) {
    const bool neg = sgn(c) < 0;
    Rat a = neg ? Rat(-c) : c;
    std::string mono = mono_str(e, vars);
    std::string body;
    if (mono == "1") body = rat_str(a);
    else if (is_one(a)) body = mono;
    else body = rat_str(a) + "*" + mono;
    return {neg, std::move(body)};
}

} // namespace

std::string poly_str(const Poly& p, const VarTable& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    // leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [neg, body] = term_str(it->first, it->second, vars);
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

namespace {

template <class Kind>
std::string basis_str(const IdxSet& idx, const VarTable& vars) {
    std::string out;
    for (int v : idx) {
        if (!out.empty()) out += "^";
        if constexpr (std::is_same_v<Kind, VecKind>)
            out += "e" + std::to_string(v + 1);
        else
            out += "d" + vars.names[v];
    }
    return out;
}

template <class Kind>
std::string tensor_str_impl(const Skew<Kind>& t, const VarTable& vars) {
    if (t.is_zero()) return "0";
    if (t.degree() == 0) return poly_str(t.coeff({}), vars);
    std::string out;
    for (const auto& [idx, c] : t.comps()) {
        const std::string basis = basis_str<Kind>(idx, vars);
        std::string body;
        bool neg = false;
        if (c.nterms() == 1) {
            auto [n, b] = term_str(c.terms()[0].first, c.terms()[0].second, vars);
            neg = n;
            body = (b == "1") ? basis : b + "*" + basis;
        } else {
            body = "(" + poly_str(c, vars) + ")*" + basis;
        }
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

} // namespace

std::string tensor_str(const MultiVec& t, const VarTable& vars) {
    return tensor_str_impl(t, vars);
}
std::string tensor_str(const DiffForm& t, const VarTable& vars) {
    return tensor_str_impl(t, vars);
}

std::string ratmat_str(const RatMat& m) {
    std::string out;
    for (int i = 0; i < m.rows; ++i) {
        if (i) out += ";";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out += ",";
            out += rat_str(m.at(i, j));
        }
    }
    return out;
}

VarTable default_vars(int nvars) {
    VarTable vars;
    for (int i = 1; i <= nvars; ++i) vars.names.push_back("x" + std::to_string(i));
    return vars;
}

} // namespace nambu
