#include "pcw/parse.hpp"

#include "pcw/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace pcw {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, Power, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

class Lexer {
public:
    Lexer(std::string_view s, int line, int column) : src_(s), line_(line), col0_(column) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        std::size_t i = 0;
        while (true) {
            while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i])))
                ++i;
            int col = col0_ + static_cast<int>(i);
            if (i == src_.size()) {
                out.push_back({Tok::End, "", col});
                return out;
            }
            char c = src_[i];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                    ++j;
                out.push_back({Tok::Ident, std::string(src_.substr(i, j - i)), col});
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j])))
                    ++j;
                out.push_back({Tok::Int, std::string(src_.substr(i, j - i)), col});
                i = j;
            } else if (c == '*' && i + 1 < src_.size() && src_[i + 1] == '*') {
                out.push_back({Tok::Power, "**", col});
                i += 2;
            } else {
                static const std::map<char, Tok> single{{'+', Tok::Plus},  {'-', Tok::Minus},  {'*', Tok::Star},
                                                        {'/', Tok::Slash}, {'^', Tok::Caret},  {'(', Tok::LParen},
                                                        {')', Tok::RParen}};
                auto it = single.find(c);
                if (it == single.end())
                    throw ParseError(ErrorKind::ParseError, std::string("unexpected character '") + c + "'", line_, col);
                out.push_back({it->second, std::string(1, c), col});
                ++i;
            }
        }
    }

private:
    std::string_view src_;
    int line_;
    int col0_;
};

// Scalars are carried as degree-0 forms so one recursive descent serves both.
class Parser {
public:
    Parser(std::vector<Token> toks, const ExpressionScope& scope, int line)
        : toks_(std::move(toks)), scope_(scope), line_(line)
    {
    }

    Form parse()
    {
        Form f = sum();
        if (peek().kind != Tok::End)
            fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg, std::optional<int> col = std::nullopt) const
    {
        throw ParseError(ErrorKind::ParseError, msg, line_, col.value_or(peek().column));
    }

    static std::optional<Scalar> as_scalar(const Form& f)
    {
        if (f.is_zero())
            return Scalar(0);
        if (f.terms().size() == 1 && f.terms().begin()->first == 0)
            return f.terms().begin()->second;
        return std::nullopt;
    }

    Form sum()
    {
        Form acc = product();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Form rhs = product();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Form product()
    {
        Form acc = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash || peek().kind == Tok::Caret) {
            const Token op = next();
            Form rhs = unary();
            if (op.kind == Tok::Caret) {
                acc = wedge(acc, rhs);
            } else if (op.kind == Tok::Star) {
                if (auto s = as_scalar(acc))
                    acc = *s * rhs;
                else if (auto t = as_scalar(rhs))
                    acc = acc * *t;
                else
                    fail("'*' needs a scalar operand; use '^' for the wedge product", op.column);
            } else {
                auto s = as_scalar(rhs);
                if (!s)
                    fail("division by a form of positive degree", op.column);
                if (s->is_zero())
                    fail("division by zero", op.column);
                acc = acc * s->inverse();
            }
        }
        return acc;
    }

    Form unary()
    {
        if (peek().kind == Tok::Minus) {
            next();
            return -unary();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Form power()
    {
        Form base = primary();
        if (peek().kind != Tok::Power)
            return base;
        const Token op = next();
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            next();
            negative = true;
        }
        if (peek().kind != Tok::Int)
            fail("'**' needs an integer exponent");
        unsigned long e = std::stoul(next().text);
        auto s = as_scalar(base);
        if (!s)
            fail("'**' needs a scalar base", op.column);
        if (negative && s->is_zero())
            fail("division by zero", op.column);
        Scalar v = s->pow(static_cast<unsigned>(e));
        return Form::constant(scope_.dim, negative ? v.inverse() : v);
    }

    Form primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int: {
            next();
            return Form::constant(scope_.dim, Scalar(mpq_class(mpz_class(t.text))));
        }
        case Tok::Ident: {
            next();
            if (scope_.generators) {
                auto it = std::find(scope_.generators->begin(), scope_.generators->end(), t.text);
                if (it != scope_.generators->end())
                    return Form::generator(scope_.dim, static_cast<int>(it - scope_.generators->begin()));
            }
            if (scope_.symbols)
                if (auto idx = scope_.symbols->find(t.text))
                    return Form::constant(scope_.dim, Scalar::symbol(*idx));
            throw ParseError(ErrorKind::UnknownGenerator, "unknown name '" + t.text + "'", line_, t.column);
        }
        case Tok::LParen: {
            next();
            Form f = sum();
            if (peek().kind != Tok::RParen)
                fail("expected ')'");
            next();
            return f;
        }
        case Tok::End: fail("unexpected end of expression");
        default: fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ExpressionScope& scope_;
    int line_;
};

}  // namespace

Form parse_form(std::string_view text, const ExpressionScope& scope, int line, int column)
{
    Parser p(Lexer(text, line, column).run(), scope, line);
    return p.parse();
}

Scalar parse_scalar(std::string_view text, const ExpressionScope& scope, int line, int column)
{
    Form f = parse_form(text, scope, line, column);
    if (f.is_zero())
        return Scalar(0);
    if (f.terms().size() == 1 && f.terms().begin()->first == 0)
        return f.terms().begin()->second;
    throw ParseError(ErrorKind::ParseError, "expected a scalar expression", line, column);
}

namespace {

struct Line {
    int number;
    std::string text;  // comment stripped
};

// Splits "head rest": the first whitespace-delimited word and the column where the rest begins.
struct Words {
    std::vector<std::pair<std::string, int>> words;  // word, 1-based column
};

Words split_words(const std::string& s, std::size_t from = 0)
{
    Words w;
    std::size_t i = from;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == s.size())
            break;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        w.words.push_back({s.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return w;
}

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class ManifestReader {
public:
    explicit ManifestReader(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        int n = 0;
        while (std::getline(in, raw)) {
            ++n;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw.erase(hash);
            lines_.push_back({n, raw});
        }
        last_line_ = n;
    }

    ManifoldModel read()
    {
        for (const auto& l : lines_) {
            auto w = split_words(l.text);
            if (w.words.empty())
                continue;
            handle(l, w);
        }
        if (!have_dim_ && !m_.generators.empty())
            declare_dim(static_cast<int>(m_.generators.size()), last_line_, 1);
        for (const char* section : {"gen", "omega", "J"})
            if (!seen_.count(section))
                throw ParseError(ErrorKind::ParseError, std::string("missing required section '") + section + "'",
                                 last_line_ + 1, 1);
        if (m_.name.empty())
            throw ParseError(ErrorKind::ParseError, "missing required section 'manifold'", last_line_ + 1, 1);
        if (have_dim_ && dim_ != static_cast<int>(m_.generators.size()))
            throw ParseError(ErrorKind::ParseError,
                             "dim " + std::to_string(dim_) + " does not match " +
                                 std::to_string(m_.generators.size()) + " generators",
                             dim_line_, 1);
        for (const auto& [sym, diff] : pending_diffs_) {
            try {
                m_.symbols.set_differential(sym, diff.first);
            } catch (const Error& e) {
                throw ParseError(e.kind(), e.what(), diff.second, 1);
            }
        }
        return m_;
    }

private:
    [[noreturn]] static void fail(const std::string& msg, int line, int col, ErrorKind k = ErrorKind::ParseError)
    {
        throw ParseError(k, msg, line, col);
    }

    void declare_dim(int d, int line, int col)
    {
        if (d <= 0 || d % 2 != 0 || d > 32)
            fail("dim must be a positive even number", line, col);
        dim_ = d;
        have_dim_ = true;
        dim_line_ = line;
    }

    void require_generators(const Line& l)
    {
        if (!seen_.count("gen"))
            fail("'gen' must come before expressions", l.number, 1);
    }

    void mark(const std::string& section, const Line& l, int col)
    {
        if (!seen_.insert(section).second)
            fail("'" + section + "' given twice", l.number, col, ErrorKind::DuplicateDeclaration);
    }

    // Position right after "=" on the line; the expression text starts there.
    std::pair<std::string, int> rhs(const Line& l, std::size_t after_col)
    {
        auto eq = l.text.find('=', after_col);
        if (eq == std::string::npos)
            fail("expected '='", l.number, static_cast<int>(after_col) + 1);
        return {l.text.substr(eq + 1), static_cast<int>(eq) + 2};
    }

    int generator(const std::string& name, const Line& l, int col)
    {
        auto idx = m_.generator_index(name);
        if (!idx)
            fail("unknown generator '" + name + "'", l.number, col, ErrorKind::UnknownGenerator);
        return *idx;
    }

    int metric_index(const std::string& tok, const Line& l, int col)
    {
        if (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int i = std::stoi(tok);
            if (i < 1 || i > m_.dim)
                fail("metric index out of range", l.number, col, ErrorKind::UnknownGenerator);
            return i - 1;
        }
        return generator(tok, l, col);
    }

    Form expression(const Line& l, const std::pair<std::string, int>& r, int degree)
    {
        Form f = parse_form(r.first, scope_of(m_), l.number, r.second);
        if (!f.is_zero() && f.degree() != degree)
            fail("expected a " + std::to_string(degree) + "-form", l.number, r.second);
        return f;
    }

    void declare_symbol(const std::string& name, SymbolKind kind, const Line& l, int col)
    {
        if (!valid_identifier(name))
            fail("invalid name '" + name + "'", l.number, col);
        if (m_.generator_index(name))
            fail("'" + name + "' is already a generator", l.number, col, ErrorKind::DuplicateDeclaration);
        try {
            m_.symbols.declare(name, kind);
        } catch (const Error& e) {
            fail(e.what(), l.number, col, ErrorKind::DuplicateDeclaration);
        }
    }

    void handle(const Line& l, const Words& w)
    {
        const auto& [key, kcol] = w.words[0];
        if (key == "manifold") {
            mark(key, l, kcol);
            if (w.words.size() != 2)
                fail("expected 'manifold <name>'", l.number, kcol);
            m_.name = w.words[1].first;
        } else if (key == "dim") {
            mark(key, l, kcol);
            if (w.words.size() != 2 || !std::all_of(w.words[1].first.begin(), w.words[1].first.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                fail("expected 'dim <2n>'", l.number, kcol);
            declare_dim(std::stoi(w.words[1].first), l.number, w.words[1].second);
        } else if (key == "gen") {
            mark(key, l, kcol);
            if (w.words.size() < 3)
                fail("expected at least two generators", l.number, kcol);
            for (std::size_t i = 1; i < w.words.size(); ++i) {
                const auto& [g, col] = w.words[i];
                if (!valid_identifier(g))
                    fail("invalid generator name '" + g + "'", l.number, col);
                if (m_.generator_index(g) || m_.symbols.find(g))
                    fail("'" + g + "' declared twice", l.number, col, ErrorKind::DuplicateDeclaration);
                m_.generators.push_back(g);
            }
            int d = static_cast<int>(m_.generators.size());
            if (d % 2 != 0 || d > 32)
                fail("the number of generators must be even", l.number, kcol);
            if (have_dim_ && d != dim_)
                fail("dim " + std::to_string(dim_) + " does not match " + std::to_string(d) + " generators", l.number, kcol);
            m_.dim = d;
            m_.structure.assign(d, Form(d));
            m_.metric = Matrix::identity(d);
            m_.j_matrix = Matrix(d, d);
            m_.omega = Form(d);
        } else if (key == "param" || key == "function") {
            if (w.words.size() < 2)
                fail("expected at least one name", l.number, kcol);
            for (std::size_t i = 1; i < w.words.size(); ++i)
                declare_symbol(w.words[i].first, key == "param" ? SymbolKind::Parameter : SymbolKind::Function, l,
                               w.words[i].second);
        } else if (key == "diff") {
            require_generators(l);
            if (w.words.size() < 2)
                fail("expected 'diff <function> = <1-form>'", l.number, kcol);
            std::string name = w.words[1].first;
            auto eq = name.find('=');
            if (eq != std::string::npos)
                name.erase(eq);
            auto idx = m_.symbols.find(name);
            if (!idx)
                fail("undeclared symbol '" + name + "'", l.number, w.words[1].second, ErrorKind::UnknownGenerator);
            if (pending_diffs_.count(name))
                fail("differential of '" + name + "' given twice", l.number, kcol, ErrorKind::DuplicateDeclaration);
            Form f = expression(l, rhs(l, w.words[1].second - 1), 1);
            FormalDifferential diff;
            for (const auto& [mask, c] : f.terms())
                diff[mask_indices(mask)[0]] = c;
            pending_diffs_[name] = {diff, l.number};
        } else if (key == "d" || key == "J") {
            require_generators(l);
            if (w.words.size() < 2)
                fail("expected '" + key + " <generator> = <form>'", l.number, kcol);
            std::string name = w.words[1].first;
            auto eq = name.find('=');
            if (eq != std::string::npos)
                name.erase(eq);
            int g = generator(name, l, w.words[1].second);
            mark(key + " " + name, l, kcol);
            if (key == "J")
                seen_.insert("J");
            Form f = expression(l, rhs(l, w.words[1].second - 1), key == "d" ? 2 : 1);
            if (key == "d") {
                m_.structure[g] = f;
            } else {
                for (const auto& [mask, c] : f.terms())
                    m_.j_matrix(g, mask_indices(mask)[0]) = c;
            }
        } else if (key == "metric") {
            require_generators(l);
            auto r = rhs(l, kcol);
            auto idx = split_words(l.text.substr(0, r.second - 2), kcol + key.size() - 1);
            if (idx.words.size() != 2)
                fail("expected 'metric <i> <j> = <scalar>'", l.number, kcol);
            int i = metric_index(idx.words[0].first, l, idx.words[0].second);
            int j = metric_index(idx.words[1].first, l, idx.words[1].second);
            auto entry = std::minmax(i, j);
            if (!metric_set_.insert(entry).second)
                fail("metric entry given twice", l.number, kcol, ErrorKind::DuplicateDeclaration);
            Scalar s = parse_scalar(r.first, scope_of(m_), l.number, r.second);
            m_.metric(i, j) = s;
            m_.metric(j, i) = s;
        } else if (key == "omega" || key.rfind("omega=", 0) == 0) {
            require_generators(l);
            mark("omega", l, kcol);
            m_.omega = expression(l, rhs(l, kcol - 1), 2);
        } else {
            fail("unknown keyword '" + key + "'", l.number, kcol);
        }
    }

    std::vector<Line> lines_;
    int last_line_ = 0;
    ManifoldModel m_;
    int dim_ = 0;
    bool have_dim_ = false;
    int dim_line_ = 0;
    std::set<std::string> seen_;
    std::set<std::pair<int, int>> metric_set_;
    std::map<std::string, std::pair<FormalDifferential, int>> pending_diffs_;
};

}  // namespace

ManifoldModel parse_manifest(std::string_view text) { return ManifestReader(text).read(); }

std::string serialize_manifest(const ManifoldModel& m)
{
    const auto& names = m.symbols.names();
    std::ostringstream out;
    out << "manifold " << m.name << "\n";
    out << "dim " << m.dim << "\n";
    out << "gen";
    for (const auto& g : m.generators)
        out << " " << g;
    out << "\n";
    for (std::size_t i = 0; i < m.symbols.size(); ++i) {
        const auto& s = m.symbols.symbol(i);
        out << (s.kind == SymbolKind::Parameter ? "param " : "function ") << s.name << "\n";
    }
    for (const auto& [idx, diff] : m.symbols.differentials()) {
        Form f(m.dim);
        for (const auto& [g, c] : diff)
            f.add_term(Mask(1) << g, c);
        out << "diff " << names[idx] << " = " << m.format(f) << "\n";
    }
    for (int i = 0; i < m.dim; ++i)
        if (!m.structure[i].is_zero())
            out << "d " << m.generators[i] << " = " << m.format(m.structure[i]) << "\n";
    for (int i = 0; i < m.dim; ++i)
        for (int j = i; j < m.dim; ++j)
            if (!(m.metric(i, j) == Scalar(i == j ? 1 : 0)))
                out << "metric " << m.generators[i] << " " << m.generators[j] << " = " << m.format(m.metric(i, j))
                    << "\n";
    out << "omega = " << m.format(m.omega) << "\n";
    for (int i = 0; i < m.dim; ++i) {
        Form row(m.dim);
        for (int j = 0; j < m.dim; ++j)
            row.add_term(Mask(1) << j, m.j_matrix(i, j));
        out << "J " << m.generators[i] << " = " << m.format(row) << "\n";
    }
    return out.str();
}

}  // namespace pcw
