#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "renewal/law.hpp"

namespace renewal {

// Textual law expressions:
//   law   := comp | "mix(" weight ":" comp ("," weight ":" comp)* ")"
//   comp  := "point(" x ")"
//          | "exp(rate=" r ["," "shift=" k] ")"
//          | "erlang(k=" n ",rate=" r ["," "shift=" k] ")"
//          | "unif(" a "," b ")"
//          | "geomN(s=" s ",scale=" a ["," "shift=" k] ")"
//          | "geomN0(s=" s ",scale=" a ["," "shift=" k] ")"
//   x     := decimal | "inf"
// Whitespace is insignificant. print_law emits the canonical spelling and
// parse_law_expr(print_law(l)) reproduces l exactly.

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class LawExprParser {
public:
    explicit LawExprParser(std::string_view text) : text_(text) {}

    ExtendedLaw parse() {
        skip_ws();
        ExtendedLaw law = starts_with("mix") ? parse_mixture() : ExtendedLaw(parse_component());
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return law;
    }

private:
    ExtendedLaw parse_mixture() {
        expect_keyword("mix");
        expect('(');
        std::vector<WeightedComponent> parts;
        while (true) {
            const double w = parse_number();
            expect(':');
            parts.push_back({w, parse_component()});
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(')');
        return ExtendedLaw(std::move(parts));
    }

    LawComponent parse_component() {
        skip_ws();
        if (starts_with("point")) {
            expect_keyword("point");
            expect('(');
            const double x = parse_extended_number();
            expect(')');
            return PointMass{x};
        }
        if (starts_with("exp")) {
            expect_keyword("exp");
            expect('(');
            const double rate = parse_named("rate");
            const double shift = parse_optional_shift();
            expect(')');
            return Exponential{rate, shift};
        }
        if (starts_with("erlang")) {
            expect_keyword("erlang");
            expect('(');
            const double k = parse_named("k");
            if (k != std::floor(k) || k < 1.0 || k > 1e6)
                fail("erlang shape must be a positive integer");
            expect(',');
            const double rate = parse_named("rate");
            const double shift = parse_optional_shift();
            expect(')');
            return Erlang{static_cast<int>(k), rate, shift};
        }
        if (starts_with("unif")) {
            expect_keyword("unif");
            expect('(');
            const double a = parse_number();
            expect(',');
            const double b = parse_number();
            expect(')');
            return Uniform{a, b};
        }
        if (starts_with("geomN0")) {
            expect_keyword("geomN0");
            return parse_geometric(0);
        }
        if (starts_with("geomN")) {
            expect_keyword("geomN");
            return parse_geometric(1);
        }
        fail("expected a component (point/exp/erlang/unif/geomN/geomN0)");
    }

    LawComponent parse_geometric(int support_start) {
        expect('(');
        const double s = parse_named("s");
        expect(',');
        const double scale = parse_named("scale");
        const double shift = parse_optional_shift();
        expect(')');
        return LatticeGeometric{s, scale, shift, support_start};
    }

    double parse_named(std::string_view name) {
        expect_keyword(name);
        expect('=');
        return parse_number();
    }

    double parse_optional_shift() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            return parse_named("shift");
        }
        return 0.0;
    }

    double parse_extended_number() {
        skip_ws();
        if (starts_with("inf")) {
            pos_ += 3;
            return kInfinity;
        }
        return parse_number();
    }

    double parse_number() {
        skip_ws();
        double value = 0.0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        const auto result = std::from_chars(begin, end, value);
        if (result.ec != std::errc{}) fail("expected a number");
        pos_ += static_cast<std::size_t>(result.ptr - begin);
        return value;
    }

    bool starts_with(std::string_view kw) {
        skip_ws();
        return text_.substr(pos_, kw.size()) == kw;
    }

    void expect_keyword(std::string_view kw) {
        skip_ws();
        if (text_.substr(pos_, kw.size()) != kw)
            fail("expected '" + std::string(kw) + "'");
        pos_ += kw.size();
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) {
        throw parse_error(message, pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::string format_double(double v) {
    if (std::isinf(v)) return "inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string print_component(const LawComponent& c) {
    struct Printer {
        std::string operator()(const PointMass& pm) const {
            return "point(" + format_double(pm.x) + ")";
        }
        std::string operator()(const Exponential& e) const {
            std::string out = "exp(rate=" + format_double(e.rate);
            if (e.shift != 0.0) out += ",shift=" + format_double(e.shift);
            return out + ")";
        }
        std::string operator()(const Erlang& e) const {
            std::string out = "erlang(k=" + std::to_string(e.shape) +
                              ",rate=" + format_double(e.rate);
            if (e.shift != 0.0) out += ",shift=" + format_double(e.shift);
            return out + ")";
        }
        std::string operator()(const Uniform& u) const {
            return "unif(" + format_double(u.lo) + "," + format_double(u.hi) + ")";
        }
        std::string operator()(const LatticeGeometric& g) const {
            std::string out = g.support_start == 1 ? "geomN(" : "geomN0(";
            out += "s=" + format_double(g.s) + ",scale=" + format_double(g.scale);
            if (g.shift != 0.0) out += ",shift=" + format_double(g.shift);
            return out + ")";
        }
    };
    return std::visit(Printer{}, c);
}

} // namespace detail

inline ExtendedLaw parse_law_expr(std::string_view text) {
    return detail::LawExprParser(text).parse();
}

inline std::string print_law(const ExtendedLaw& law) {
    const auto& parts = law.components();
    if (parts.size() == 1 && parts[0].weight == 1.0)
        return detail::print_component(parts[0].component);
    std::string out = "mix(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += detail::format_double(parts[i].weight) + ":" +
               detail::print_component(parts[i].component);
    }
    return out + ")";
}

} // namespace renewal
