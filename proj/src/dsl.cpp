#include "cdga/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace cdga {

namespace {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind = End;
    std::string text;
    int line = 0;
    int col = 0;
};

class Lexer {
public:
    Lexer(std::string_view text, int line) : text_(text), line_(line) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size() || text_[pos_] == '#')
            return {Token::End, "", line_, static_cast<int>(pos_) + 1};
        int col = static_cast<int>(pos_) + 1;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, std::string(text_.substr(start, pos_ - start)), line_, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Number, std::string(text_.substr(start, pos_ - start)), line_, col};
        }
        static const std::string symbols = ":=^*+-/(),";
        if (symbols.find(c) != std::string::npos) {
            ++pos_;
            return {Token::Symbol, std::string(1, c), line_, col};
        }
        throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

std::vector<Token> tokenize_line(std::string_view text, int line) {
    Lexer lex(text, line);
    std::vector<Token> out;
    for (Token t = lex.next(); t.kind != Token::End; t = lex.next()) out.push_back(t);
    out.push_back({Token::End, "", line, static_cast<int>(text.size()) + 1});
    return out;
}

// Recursive-descent expression parser over one token stream.
class ExprParser {
public:
    ExprParser(const GradedAlgebra& algebra, const std::vector<Token>& tokens,
               std::vector<std::string>* warnings)
        : algebra_(algebra), tokens_(tokens), warnings_(warnings) {}

    Element parse() {
        Element out = expression();
        expect_end();
        return out;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool at_symbol(const char* s) const {
        return peek().kind == Token::Symbol && peek().text == s;
    }

    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg);
    }

    void expect_end() {
        if (peek().kind != Token::End) fail(peek(), "unexpected trailing '" + peek().text + "'");
    }

    int parse_int(const char* what) {
        if (peek().kind != Token::Number) fail(peek(), std::string("expected ") + what);
        Token t = take();
        if (t.text.size() > 9) fail(t, std::string(what) + " is too large");
        return std::stoi(t.text);
    }

    Element expression() {
        Element out(algebra_);
        bool negative = false;
        if (at_symbol("-")) {
            take();
            negative = true;
        } else if (at_symbol("+")) {
            take();
        }
        out += term(negative);
        while (at_symbol("+") || at_symbol("-")) {
            bool minus = take().text == "-";
            out += term(minus);
        }
        return out;
    }

    // A product of rational constants and generator powers.
    Element term(bool negative) {
        Rational coeff = negative ? -1 : 1;
        std::vector<int> word;
        bool any = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == Token::Number) {
                coeff *= rational_atom();
                any = true;
            } else if (t.kind == Token::Ident) {
                generator_atom(word);
                any = true;
            } else {
                fail(t, "expected a number or generator name");
            }
            if (at_symbol("*")) {
                take();
                continue;
            }
            break;
        }
        if (!any) fail(peek(), "empty term");
        auto [sign, mono] = algebra_.normalize(word);
        if (sign == 0) {
            if (warnings_)
                warnings_->push_back("term with a repeated odd generator collapses to zero");
            return Element(algebra_);
        }
        return Element(algebra_, mono, sign * coeff);
    }

    Rational rational_atom() {
        Token num = take();
        Rational value{Integer(num.text)};
        if (at_symbol("/")) {
            take();
            if (peek().kind != Token::Number) fail(peek(), "expected a denominator");
            Token den = take();
            Integer d{den.text};
            if (d == 0) fail(den, "zero denominator");
            value /= Rational(d);
        }
        return value;
    }

    void generator_atom(std::vector<int>& word) {
        Token name = take();
        auto gen = algebra_.find(name.text);
        if (!gen) fail(name, "unknown generator '" + name.text + "'");
        int exp = 1;
        if (at_symbol("^")) {
            take();
            exp = parse_int("exponent");
            if (exp < 1) fail(name, "exponent must be >= 1");
            if (exp > 512) fail(name, "exponent is unreasonably large");
        }
        for (int i = 0; i < exp; ++i) word.push_back(*gen);
    }

    const GradedAlgebra& algebra_;
    const std::vector<Token>& tokens_;
    std::vector<std::string>* warnings_;
    std::size_t pos_ = 0;
};

std::vector<std::pair<int, std::vector<Token>>> tokenized_lines(std::string_view text) {
    std::vector<std::pair<int, std::vector<Token>>> lines;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = (end == std::string_view::npos)
                                    ? text.substr(start)
                                    : text.substr(start, end - start);
        ++line_no;
        auto tokens = tokenize_line(line, line_no);
        if (tokens.size() > 1) lines.emplace_back(line_no, std::move(tokens));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return lines;
}

} // namespace

RawAlgebra parse_algebra_raw(std::string_view text) {
    auto lines = tokenized_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input, expected an 'algebra' line");

    std::optional<std::string> name;
    std::vector<Generator> gens;
    std::vector<std::pair<Token, std::vector<Token>>> d_lines; // generator token, expr tokens

    for (auto& [line_no, tokens] : lines) {
        const Token& head = tokens.front();
        if (head.kind != Token::Ident)
            throw ParseError(head.line, head.col, "expected a directive");
        auto expect = [&](std::size_t i, Token::Kind kind,
                          const std::string& what) -> const Token& {
            if (i >= tokens.size() || tokens[i].kind != kind)
                throw ParseError(head.line,
                                 i < tokens.size() ? tokens[i].col : head.col,
                                 "expected " + what);
            return tokens[i];
        };
        auto expect_symbol = [&](std::size_t i, const char* s) {
            if (i >= tokens.size() || tokens[i].kind != Token::Symbol || tokens[i].text != s)
                throw ParseError(head.line,
                                 i < tokens.size() ? tokens[i].col : head.col,
                                 std::string("expected '") + s + "'");
        };
        auto expect_count = [&](std::size_t n) {
            if (tokens.size() - 1 != n) // minus the End token
                throw ParseError(tokens[std::min(n + 1, tokens.size() - 1)].line,
                                 tokens[std::min(n + 1, tokens.size() - 1)].col,
                                 "unexpected extra input");
        };

        if (head.text == "algebra") {
            if (name) throw ParseError(head.line, head.col, "second 'algebra' line");
            if (!gens.empty())
                throw ParseError(head.line, head.col, "'algebra' must come before 'gen'");
            name = expect(1, Token::Ident, "an algebra name").text;
            expect_count(2);
        } else if (head.text == "gen") {
            if (!name) throw ParseError(head.line, head.col, "'gen' before the 'algebra' line");
            const Token& gname = expect(1, Token::Ident, "a generator name");
            expect_symbol(2, ":");
            const Token& deg = expect(3, Token::Number, "a degree");
            expect_count(4);
            if (deg.text.size() > 6)
                throw ParseError(deg.line, deg.col, "degree is unreasonably large");
            gens.push_back({gname.text, std::stoi(deg.text)});
        } else if (head.text == "d") {
            if (!name) throw ParseError(head.line, head.col, "'d' before the 'algebra' line");
            const Token& gname = expect(1, Token::Ident, "a generator name");
            expect_symbol(2, "=");
            if (tokens.size() <= 4 && tokens[3].kind == Token::End)
                throw ParseError(head.line, tokens[3].col, "empty differential expression");
            d_lines.emplace_back(gname,
                                 std::vector<Token>(tokens.begin() + 3, tokens.end()));
        } else {
            throw ParseError(head.line, head.col,
                             "unknown directive '" + head.text + "' (expected 'algebra', "
                             "'gen' or 'd')");
        }
    }
    if (!name) throw ParseError(1, 1, "missing 'algebra' line");

    GradedAlgebra algebra = [&] {
        try {
            return GradedAlgebra::create(gens);
        } catch (const InputError& e) {
            throw ParseError(1, 1, e.what());
        }
    }();

    std::vector<Element> diffs(algebra.size(), Element(algebra));
    std::vector<bool> seen(algebra.size(), false);
    for (const auto& [gname, expr_tokens] : d_lines) {
        auto gen = algebra.find(gname.text);
        if (!gen) throw ParseError(gname.line, gname.col,
                                   "unknown generator '" + gname.text + "'");
        if (seen[*gen]) throw ParseError(gname.line, gname.col,
                                         "second differential for '" + gname.text + "'");
        seen[*gen] = true;
        diffs[*gen] = ExprParser(algebra, expr_tokens, nullptr).parse();
    }
    return {*name, std::move(algebra), std::move(diffs)};
}

AlgebraSpec parse_algebra(std::string_view text) {
    RawAlgebra raw = parse_algebra_raw(text);
    return {raw.name, Cdga::create(raw.algebra, raw.diffs)};
}

Element parse_element(const GradedAlgebra& algebra, std::string_view text,
                      std::vector<std::string>* warnings) {
    auto tokens = tokenize_line(text, 1);
    return ExprParser(algebra, tokens, warnings).parse();
}

std::string render_algebra(const AlgebraSpec& spec) {
    std::string out = "algebra " + spec.name + "\n";
    const GradedAlgebra& alg = spec.cdga.algebra();
    for (int i = 0; i < alg.size(); ++i)
        out += "gen " + alg.gen(i).name + " : " + std::to_string(alg.gen(i).degree) + "\n";
    for (int i = 0; i < alg.size(); ++i) {
        const Element& d = spec.cdga.diff_of(i);
        if (!d.is_zero()) out += "d " + alg.gen(i).name + " = " + d.str() + "\n";
    }
    return out;
}

std::vector<Rational> parse_ring_class(const FiniteRing& ring, std::string_view text) {
    std::map<std::string, int> labels;
    for (int i = 0; i < ring.dim(); ++i) labels[ring.basis()[i].label] = i;

    auto tokens = tokenize_line(text, 1);
    std::vector<Rational> coords(ring.dim(), Rational(0));
    std::size_t pos = 0;
    auto at_symbol = [&](const char* s) {
        return tokens[pos].kind == Token::Symbol && tokens[pos].text == s;
    };
    bool first = true;
    while (tokens[pos].kind != Token::End) {
        Rational sign = 1;
        if (at_symbol("-")) {
            sign = -1;
            ++pos;
        } else if (at_symbol("+")) {
            if (first) throw ParseError(1, tokens[pos].col, "unexpected leading '+'");
            ++pos;
        } else if (!first) {
            throw ParseError(1, tokens[pos].col, "expected '+' or '-'");
        }
        first = false;
        Rational coeff = 1;
        if (tokens[pos].kind == Token::Number) {
            std::string num = tokens[pos].text;
            ++pos;
            Rational value{Integer(num)};
            if (at_symbol("/")) {
                ++pos;
                if (tokens[pos].kind != Token::Number)
                    throw ParseError(1, tokens[pos].col, "expected a denominator");
                Integer den{tokens[pos].text};
                if (den == 0) throw ParseError(1, tokens[pos].col, "zero denominator");
                value /= Rational(den);
                ++pos;
            }
            coeff = value;
            if (at_symbol("*")) ++pos;
            else if (tokens[pos].kind != Token::Ident)
                throw ParseError(1, tokens[pos].col, "expected a basis label");
        }
        if (tokens[pos].kind != Token::Ident)
            throw ParseError(1, tokens[pos].col, "expected a basis label");
        auto it = labels.find(tokens[pos].text);
        if (it == labels.end())
            throw ParseError(1, tokens[pos].col,
                             "unknown basis label '" + tokens[pos].text + "'");
        coords[it->second] += sign * coeff;
        ++pos;
    }
    if (first) throw ParseError(1, 1, "empty class expression");
    return coords;
}

} // namespace cdga
