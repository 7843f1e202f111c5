#include "qtorus/definability.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

namespace qtorus {

AtomicFormula AtomicFormula::normalized() const {
    if (sgn(lhs_x_exp) <= 0) return *this;
    return AtomicFormula{-lhs_y_exp, -lhs_x_exp, -rhs_x_exp, -rhs_y_exp};
}

AtomicFormula rewrite(const Mat2Z& m) {
    return AtomicFormula{m.c(), -m.a(), m.b(), -m.d()};
}

bool eval_atomic(const AtomicFormula& f, const ExpPoint& x, const ExpPoint& y,
                 const QuadNum& theta) {
    // Checked on the raw inputs, not the combined arguments: a zero exponent
    // in f could otherwise erase the one operand from the wrong field.
    QuadNum::common_disc(x.alpha, y.alpha);
    QuadNum::common_disc(x.alpha, theta);
    QuadNum::common_disc(y.alpha, theta);
    QuadNum first = QuadNum(f.lhs_y_exp) * y.alpha + QuadNum(f.lhs_x_exp) * x.alpha;
    QuadNum second = QuadNum(f.rhs_x_exp) * x.alpha + QuadNum(f.rhs_y_exp) * y.alpha;
    return ctheta_related(ExpPoint{first}, ExpPoint{second}, theta);
}

namespace {

void render_factor(std::ostringstream& out, const char* sym, const Int& e, bool& first) {
    if (e == 0) return;
    if (!first) out << " * ";
    first = false;
    out << sym;
    if (e != 1) out << "^" << e;
}

void render_side(std::ostringstream& out, const char* sym1, const Int& e1, const char* sym2,
                 const Int& e2) {
    bool first = true;
    render_factor(out, sym1, e1, first);
    render_factor(out, sym2, e2, first);
    if (first) out << "1";
}

} // namespace

std::string to_string(const AtomicFormula& f) {
    std::ostringstream out;
    out << "C_theta(";
    render_side(out, "y", f.lhs_y_exp, "x", f.lhs_x_exp);
    out << ", ";
    render_side(out, "x", f.rhs_x_exp, "y", f.rhs_y_exp);
    out << ")";
    return out.str();
}

namespace {

class FormulaParser {
public:
    explicit FormulaParser(const std::string& text) : text_(text) {}

    AtomicFormula parse() {
        skip_space();
        if (text_.compare(pos_, 7, "C_theta") != 0) throw ParseError("expected C_theta(...)");
        pos_ += 7;
        expect('(');
        auto [y1, x1] = side(',');
        expect(',');
        auto [y2, x2] = side(')');
        expect(')');
        skip_space();
        if (pos_ != text_.size()) throw ParseError("trailing input after formula");
        return AtomicFormula{y1, x1, x2, y2};
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' at '" + text_.substr(pos_, 12) + "'");
        ++pos_;
    }

    Int integer() {
        skip_space();
        bool parens = peek() == '(';
        if (parens) ++pos_;
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected an exponent at '" + text_.substr(start, 12) + "'");
        Int value(text_.substr(start, pos_ - start));
        if (parens) expect(')');
        return value;
    }

    // One formula argument: "1" or var[^exp] factors joined by '*'.
    std::pair<Int, Int> side(char terminator) {
        Int ye = 0, xe = 0;
        if (peek() == '1') {
            ++pos_;
            return {ye, xe};
        }
        for (;;) {
            char c = peek();
            if (c != 'x' && c != 'y')
                throw ParseError("expected x or y at '" + text_.substr(pos_, 12) + "'");
            ++pos_;
            Int e = 1;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                e = integer();
            }
            (c == 'y' ? ye : xe) += e;
            if (peek() != '*') break;
            ++pos_;
        }
        if (peek() != terminator)
            throw ParseError(std::string("expected '") + terminator + "' in formula argument");
        return {ye, xe};
    }
};

std::string pair_label(const QuadNum& ax, const QuadNum& ay) {
    return "x=" + to_string(ax) + ";y=" + to_string(ay);
}

// Pairs solving f's relation exactly, with small integer witnesses (k, n):
//   rhs_x*ax + rhs_y*ay = theta*(lhs_y*ay + lhs_x*ax + k) + n
// solved for ay whenever its coefficient rhs_y - theta*lhs_y is nonzero.
void constructed_pairs(const AtomicFormula& f, const QuadNum& theta,
                       const std::vector<QuadNum>& xs,
                       std::vector<std::pair<QuadNum, QuadNum>>& out) {
    if (f.lhs_y_exp == 0 && f.rhs_y_exp == 0) return; // y-free relation
    QuadNum ycoeff = QuadNum(f.rhs_y_exp) - theta * QuadNum(f.lhs_y_exp);
    if (ycoeff.is_zero()) return; // impossible for irrational theta unless both are 0
    const long witnesses[][2] = {{0, 0}, {1, 0}, {0, 1}, {-1, 2}};
    for (const QuadNum& ax : xs) {
        for (const auto& [k, n] : witnesses) {
            QuadNum ay = (theta * (QuadNum(f.lhs_x_exp) * ax + QuadNum(k)) + QuadNum(n) -
                          QuadNum(f.rhs_x_exp) * ax) /
                         ycoeff;
            out.emplace_back(ax, ay);
        }
    }
}

Report run_samples(const AtomicFormula& f1, const AtomicFormula& f2, const QuadNum& theta,
                   const std::vector<std::pair<QuadNum, QuadNum>>& samples) {
    Report report;
    for (const auto& [ax, ay] : samples) {
        bool b1 = eval_atomic(f1, ExpPoint{ax}, ExpPoint{ay}, theta);
        bool b2 = eval_atomic(f2, ExpPoint{ax}, ExpPoint{ay}, theta);
        if (b1 == b2) report.add_ok(pair_label(ax, ay));
        else report.add_fail(pair_label(ax, ay), b1 ? "true" : "false", b2 ? "true" : "false");
    }
    return report;
}

std::vector<std::pair<QuadNum, QuadNum>> sample_family(const AtomicFormula& f1,
                                                       const AtomicFormula& f2,
                                                       const QuadNum& theta,
                                                       std::size_t max_samples) {
    const QuadNum root = QuadNum::sqrt_of(theta.disc());
    std::vector<std::pair<QuadNum, QuadNum>> samples;
    std::vector<QuadNum> xs = {QuadNum(0), QuadNum(make_rational(1, 7)),
                               root * QuadNum(make_rational(1, 11)),
                               QuadNum(make_rational(1, 2)) + root * QuadNum(make_rational(1, 3))};
    constructed_pairs(f1, theta, xs, samples);
    constructed_pairs(f2, theta, xs, samples);
    for (long px = -2; px <= 2; ++px)
        for (long qx = -1; qx <= 1; ++qx)
            for (long py = -1; py <= 1; ++py)
                for (long qy = -1; qy <= 1; ++qy)
                    samples.emplace_back(
                        QuadNum(make_rational(px, 7)) + root * QuadNum(make_rational(qx, 11)),
                        QuadNum(make_rational(py, 5)) + root * QuadNum(make_rational(qy, 13)));
    if (samples.size() > max_samples) samples.resize(max_samples);
    return samples;
}

} // namespace

AtomicFormula parse_formula(const std::string& text) { return FormulaParser(text).parse(); }

Report semantic_equiv(const AtomicFormula& f1, const AtomicFormula& f2, const QuadNum& theta,
                      std::size_t max_samples) {
    theta.require_irrational();
    return run_samples(f1, f2, theta, sample_family(f1, f2, theta, max_samples));
}

Report semantic_equiv(const AtomicFormula& f1, const AtomicFormula& f2, const QuadNum& theta,
                      std::size_t max_samples, std::size_t extra_samples, unsigned long seed) {
    theta.require_irrational();
    auto samples = sample_family(f1, f2, theta, max_samples);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 15);
    const QuadNum root = QuadNum::sqrt_of(theta.disc());
    for (std::size_t i = 0; i < extra_samples; ++i) {
        auto draw = [&] {
            return QuadNum(make_rational(num(rng), den(rng))) +
                   root * QuadNum(make_rational(num(rng), den(rng)));
        };
        samples.emplace_back(draw(), draw());
    }
    return run_samples(f1, f2, theta, samples);
}

} // namespace qtorus
