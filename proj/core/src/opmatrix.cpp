#include "laxforge/opmatrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace laxforge {

namespace {

char kind_char(VarKind k) { return k == VarKind::Q ? 'q' : 'r'; }

std::optional<VarKind> kind_of_char(char c) {
    if (c == 'q') return VarKind::Q;
    if (c == 'r') return VarKind::R;
    return std::nullopt;
}

bool term_key_less(const OpTerm& a, const OpTerm& b) {
    bool at = a.theta.has_value(), bt = b.theta.has_value();
    if (at != bt) return !at;  // plain D terms first
    if (at && *a.theta != *b.theta) return *a.theta < *b.theta;
    return a.dpow < b.dpow;
}

bool term_key_equal(const OpTerm& a, const OpTerm& b) {
    return a.theta == b.theta && a.dpow == b.dpow;
}

}  // namespace

OpEntry canonical_entry(OpEntry terms) {
    std::sort(terms.begin(), terms.end(), term_key_less);
    OpEntry out;
    for (auto& t : terms) {
        if (t.coef.is_zero()) continue;
        if (!out.empty() && term_key_equal(out.back(), t)) {
            out.back().coef += t.coef;
            if (out.back().coef.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

DiffPoly apply_entry(const OpEntry& entry, const DiffPoly& f) {
    DiffPoly out;
    for (const auto& t : entry) {
        DiffPoly g = ddx_n(f, t.dpow);
        if (t.theta) {
            g = theta(t.theta->x, t.theta->y, t.theta->mu, t.theta->nu, g);
        }
        out += g.scaled(t.coef);
    }
    return out;
}

std::string entry_to_text(const OpEntry& entry) {
    if (entry.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : entry) {
        Scalar c = t.coef;
        bool neg = false;
        // Print sign from the leading rational component.
        Scalar probe = c;
        if ((!probe.a().is_zero() && probe.a().sign() < 0) ||
            (probe.a().is_zero() && !probe.b().is_zero() && probe.b().sign() < 0) ||
            (probe.a().is_zero() && probe.b().is_zero() && !probe.c().is_zero() &&
             probe.c().sign() < 0) ||
            (probe.a().is_zero() && probe.b().is_zero() && probe.c().is_zero() &&
             probe.d().sign() < 0)) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool want_coef = !c.is_one() || (!t.theta && t.dpow == 0);
        if (want_coef) os << c.str();
        bool emitted = want_coef;
        if (t.theta) {
            if (emitted) os << "*";
            os << "T" << kind_char(t.theta->x) << kind_char(t.theta->y) << "(" << t.theta->mu
               << "," << t.theta->nu << ")";
            emitted = true;
        }
        if (t.dpow > 0) {
            if (emitted) os << "*";
            os << "D";
            if (t.dpow > 1) os << "^" << t.dpow;
        }
    }
    return os.str();
}

std::string entry_to_latex(const OpEntry& entry) {
    if (entry.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : entry) {
        Scalar c = t.coef;
        bool neg = (!c.a().is_zero() && c.a().sign() < 0);
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (!c.is_one() || (!t.theta && t.dpow == 0)) os << c.str() << "\\,";
        if (t.theta)
            os << "\\Theta^{" << kind_char(t.theta->x) << kind_char(t.theta->y) << "}_{"
               << t.theta->mu << t.theta->nu << "}";
        if (t.dpow > 0) {
            os << "\\partial";
            if (t.dpow > 1) os << "^{" << t.dpow << "}";
        }
    }
    return os.str();
}

namespace {

class OpParser {
public:
    explicit OpParser(const std::string& s) : s_(s) {}

    OpEntry parse() {
        OpEntry entry;
        skip_ws();
        if (s_.compare(pos_, 1, "0") == 0 && pos_ + 1 == s_.size()) return entry;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        entry.push_back(parse_term(neg));
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            if (eat('+'))
                entry.push_back(parse_term(false));
            else if (eat('-'))
                entry.push_back(parse_term(true));
            else
                fail("expected '+' or '-'");
        }
        return canonical_entry(std::move(entry));
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "operator parse error at " << pos_ << ": " << what;
        throw std::invalid_argument(os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long long parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected digits");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    OpTerm parse_term(bool neg) {
        OpTerm t;
        t.coef = Scalar(neg ? -1 : 1);
        bool have_atom = false;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                long long num = parse_uint();
                if (eat('/')) {
                    long long den = parse_uint();
                    t.coef *= Scalar(Rational(BigInt(num), BigInt(den)));
                } else {
                    t.coef *= Scalar(Rational(BigInt(num)));
                }
            } else if (c == 'i' && !isalnum_at(1)) {
                ++pos_;
                t.coef *= Scalar::i();
            } else if (c == 's' && s_.compare(pos_, 2, "s7") == 0) {
                pos_ += 2;
                t.coef *= Scalar::sqrt7();
            } else if (c == 'D') {
                ++pos_;
                int p = 1;
                if (eat('^')) p = static_cast<int>(parse_uint());
                t.dpow += p;
                have_atom = true;
            } else if (c == 'T') {
                if (t.theta) fail("more than one Theta factor in a term");
                ++pos_;
                if (pos_ + 1 >= s_.size()) fail("truncated Theta");
                auto kx = kind_of_char(s_[pos_]);
                auto ky = kind_of_char(s_[pos_ + 1]);
                if (!kx || !ky) fail("Theta kinds must be q/r");
                pos_ += 2;
                if (!eat('(')) fail("expected '(' after Theta");
                long long mu = parse_uint();
                if (!eat(',')) fail("expected ','");
                long long nu = parse_uint();
                if (!eat(')')) fail("expected ')'");
                t.theta = ThetaOp{*kx, *ky, static_cast<int>(mu), static_cast<int>(nu)};
                have_atom = true;
            } else {
                fail("unexpected character in operator term");
            }
            skip_ws();
            if (!eat('*')) break;
        }
        if (!have_atom && t.coef.is_zero()) fail("empty operator term");
        return t;
    }

    bool isalnum_at(std::size_t off) const {
        return pos_ + off < s_.size() &&
               std::isalnum(static_cast<unsigned char>(s_[pos_ + off]));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

OpEntry parse_op_entry(const std::string& text) { return OpParser(text).parse(); }

bool entries_equal(const OpEntry& a, const OpEntry& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!term_key_equal(a[i], b[i]) || a[i].coef != b[i].coef) return false;
    }
    return true;
}

std::string StackSlot::name() const {
    std::string s = kind == VarKind::CoefB ? "B" : "C";
    return s + std::to_string(comp);
}

std::vector<DiffPoly> RecursionOperator::apply(const std::vector<DiffPoly>& stack_values) const {
    if (stack_values.size() != stack.size())
        throw std::invalid_argument("RecursionOperator: stack size mismatch");
    std::vector<DiffPoly> out(stack.size());
    for (std::size_t r = 0; r < stack.size(); ++r)
        for (std::size_t c = 0; c < stack.size(); ++c)
            out[r] += apply_entry(at(r, c), stack_values[c]);
    return out;
}

std::string RecursionOperator::to_text() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < stack.size(); ++r) {
        for (std::size_t c = 0; c < stack.size(); ++c) {
            os << "[" << r + 1 << "," << c + 1 << "] " << entry_to_text(at(r, c)) << "\n";
        }
    }
    return os.str();
}

}  // namespace laxforge
