#include "laxforge/refdiff.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "laxforge/grammar.hpp"

#ifndef LAXFORGE_DEFAULT_REFDIR
#define LAXFORGE_DEFAULT_REFDIR "data/reference"
#endif

namespace laxforge {

std::string reference_dir() {
    if (const char* env = std::getenv("LAXFORGE_REFDIR"); env && *env) return env;
    return LAXFORGE_DEFAULT_REFDIR;
}

namespace {

std::vector<std::string> data_lines(const std::string& filename) {
    std::string path = reference_dir() + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        lines.push_back(line.substr(start));
    }
    return lines;
}

}  // namespace

std::map<std::pair<int, int>, OpEntry> load_reference_operator(const std::string& filename) {
    std::map<std::pair<int, int>, OpEntry> out;
    for (const auto& line : data_lines(filename)) {
        std::istringstream is(line);
        std::string tag;
        int r, c;
        char eq;
        if (!(is >> tag >> r >> c >> eq) || eq != '=')
            throw std::runtime_error("bad operator reference line: " + line);
        std::string rest;
        std::getline(is, rest);
        out[{r, c}] = parse_op_entry(rest);
    }
    return out;
}

std::map<std::string, DiffPoly> load_reference_flows(const std::string& filename) {
    std::map<std::string, DiffPoly> out;
    for (const auto& line : data_lines(filename)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad flow reference line: " + line);
        std::string lhs = line.substr(0, eq);
        while (!lhs.empty() && lhs.back() == ' ') lhs.pop_back();
        out[lhs] = parse_poly(line.substr(eq + 1));
    }
    return out;
}

std::vector<ReferenceComponent> load_reference_components(const std::string& filename) {
    std::vector<ReferenceComponent> out;
    for (const auto& line : data_lines(filename)) {
        ReferenceComponent rc;
        std::size_t pos = 0;
        auto skip_ws = [&] { while (pos < line.size() && line[pos] == ' ') ++pos; };
        auto expect = [&](const std::string& word) {
            skip_ws();
            if (line.compare(pos, word.size(), word) != 0)
                throw std::runtime_error("bad component line (expected '" + word + "'): " + line);
            pos += word.size();
        };
        auto read_int = [&] {
            skip_ws();
            std::size_t start = pos;
            while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
            if (start == pos) throw std::runtime_error("bad component line (number): " + line);
            return std::stoi(line.substr(start, pos - start));
        };
        expect("Ut");
        rc.label = read_int();
        expect("-");
        expect("Vx");
        int vxl = read_int();
        if (vxl != rc.label) throw std::runtime_error("component line label mismatch: " + line);
        while (true) {
            skip_ws();
            if (pos >= line.size()) break;
            if (line.compare(pos, 1, "=") == 0) break;
            bool neg = false;
            if (line[pos] == '+') {
                ++pos;
            } else if (line[pos] == '-') {
                neg = true;
                ++pos;
            } else {
                throw std::runtime_error("bad component line (sign): " + line);
            }
            skip_ws();
            Scalar w(1);
            if (std::isdigit(static_cast<unsigned char>(line[pos]))) {
                int num = read_int();
                Scalar s(num);
                if (pos < line.size() && line[pos] == '/') {
                    ++pos;
                    int den = read_int();
                    s = Scalar(Rational(BigInt(num), BigInt(den)));
                }
                w = s;
                skip_ws();
                if (pos < line.size() && line[pos] == '*') ++pos;
            }
            expect("[U");
            int j = read_int();
            expect(",V");
            int m = read_int();
            expect("]");
            if (neg) w = -w;
            rc.brackets.push_back(BracketTerm{w, j, m});
        }
        out.push_back(std::move(rc));
    }
    return out;
}

namespace {

std::string theta_id(const OpTerm& t) {
    std::ostringstream os;
    if (t.theta) {
        os << "T" << (t.theta->x == VarKind::Q ? 'q' : 'r')
           << (t.theta->y == VarKind::Q ? 'q' : 'r') << "(" << t.theta->mu << "," << t.theta->nu
           << ")";
    }
    if (t.dpow > 0) os << "D^" << t.dpow;
    return os.str();
}

EntryDiff classify_entry_diff(const std::string& id, const OpEntry& derived,
                              const OpEntry& reference) {
    EntryDiff d;
    d.id = id;
    if (entries_equal(derived, reference)) {
        d.match = true;
        return d;
    }
    // Atoms present on one side only (or with different coefficients).
    std::vector<const OpTerm*> extra, missing;
    auto find_in = [](const OpEntry& e, const OpTerm& t) -> const OpTerm* {
        for (const auto& x : e)
            if (x.theta == t.theta && x.dpow == t.dpow) return &x;
        return nullptr;
    };
    int sign_flips = 0, coef_changes = 0;
    for (const auto& t : derived) {
        const OpTerm* ref = find_in(reference, t);
        if (!ref) {
            extra.push_back(&t);
        } else if (ref->coef == -t.coef) {
            ++sign_flips;
        } else if (!(ref->coef == t.coef)) {
            ++coef_changes;
        }
    }
    for (const auto& t : reference)
        if (!find_in(derived, t)) missing.push_back(&t);

    std::ostringstream detail;
    if (sign_flips) detail << sign_flips << " sign-flipped term(s); ";
    if (coef_changes) detail << coef_changes << " coefficient change(s); ";
    for (auto* t : extra) detail << "derived-only " << theta_id(*t) << "; ";
    for (auto* t : missing) detail << "printed-only " << theta_id(*t) << "; ";

    if (extra.size() == 1 && missing.size() == 1 && extra.front()->coef == missing.front()->coef) {
        const OpTerm &a = *extra.front(), &b = *missing.front();
        if (a.theta && b.theta && a.dpow == b.dpow) {
            if (a.theta->x == b.theta->x && a.theta->y == b.theta->y)
                d.classification = "index-slip";
            else if (a.theta->mu == b.theta->mu && a.theta->nu == b.theta->nu)
                d.classification = "kind-slip";
            else
                d.classification = "theta-substitution";
        } else {
            d.classification = "term-substitution";
        }
    } else if (!sign_flips && !coef_changes && extra.empty() && !missing.empty()) {
        d.classification = "missing-term";
    } else if (!sign_flips && !coef_changes && missing.empty() && !extra.empty()) {
        d.classification = "extra-term";
    } else if (sign_flips && !coef_changes && extra.empty() && missing.empty()) {
        d.classification = "sign";
    } else if (coef_changes && !sign_flips && extra.empty() && missing.empty()) {
        d.classification = "coefficient";
    } else {
        d.classification = "mixed";
    }
    d.detail = detail.str();
    return d;
}

}  // namespace

EntryDiff classify_poly_diff(const std::string& id, const DiffPoly& derived,
                             const DiffPoly& reference) {
    EntryDiff d;
    d.id = id;
    if (derived == reference) {
        d.match = true;
        return d;
    }
    // Global scale?
    if (!derived.is_zero() && !reference.is_zero() &&
        derived.term_count() == reference.term_count()) {
        const Monomial& m0 = derived.terms().front();
        Scalar ratio;
        bool have = false;
        for (const auto& r : reference.terms()) {
            if (r.compare_key(m0) == 0) {
                ratio = m0.coef * r.coef.inverse();
                have = true;
                break;
            }
        }
        if (have && derived == reference.scaled(ratio)) {
            d.classification = "scale";
            d.detail = "derived = " + ratio.str() + " * printed";
            return d;
        }
    }
    DiffPoly delta = derived - reference;
    int flips = 0;
    std::vector<Monomial> rest;
    for (const auto& m : delta.terms()) {
        // A sign flip shows up in the difference as twice the printed term.
        Scalar half = m.coef * Scalar::rat(1, 2);
        bool matched = false;
        for (const auto& r : reference.terms()) {
            if (r.compare_key(m) == 0 && (r.coef == -half || r.coef == half)) {
                ++flips;
                matched = true;
                break;
            }
        }
        if (!matched) rest.push_back(m);
    }
    std::ostringstream detail;
    if (flips) detail << flips << " sign-flipped term(s); ";
    if (!rest.empty())
        detail << "residual: " << to_text(DiffPoly::from_terms(std::move(rest)));
    d.classification = (flips && detail.str().find("residual") == std::string::npos)
                           ? "sign"
                           : "term-mismatch";
    d.detail = detail.str();
    return d;
}

DiffSection diff_operator(const RecursionOperator& derived,
                          const std::map<std::pair<int, int>, OpEntry>& reference,
                          const std::string& title) {
    DiffSection sec;
    sec.title = title;
    for (const auto& [key, ref] : reference) {
        std::ostringstream id;
        id << key.first << "," << key.second;
        const OpEntry& got = derived.at(static_cast<std::size_t>(key.first - 1),
                                        static_cast<std::size_t>(key.second - 1));
        sec.entries.push_back(classify_entry_diff(id.str(), got, ref));
    }
    return sec;
}

DiffSection diff_flows(const PDESystem& derived, const std::map<std::string, DiffPoly>& reference,
                       const std::string& title) {
    DiffSection sec;
    sec.title = title;
    for (const auto& eq : derived.equations) {
        auto it = reference.find(eq.lhs_name());
        if (it == reference.end()) continue;
        sec.entries.push_back(classify_poly_diff(eq.lhs_name(), eq.rhs, it->second));
    }
    return sec;
}

DiffSection diff_components(const std::vector<ComponentEquation>& derived,
                            const std::vector<ReferenceComponent>& reference,
                            const std::string& title) {
    DiffSection sec;
    sec.title = title;
    for (const auto& ref : reference) {
        EntryDiff d;
        d.id = "slot " + std::to_string(ref.label);
        const ComponentEquation* got = nullptr;
        for (const auto& ce : derived)
            if (ce.label == ref.label) got = &ce;
        if (!got) {
            d.classification = "missing-slot";
            sec.entries.push_back(d);
            continue;
        }
        auto key = [](const BracketTerm& b) { return std::pair(b.j_label, b.m_label); };
        bool ok = got->brackets.size() == ref.brackets.size();
        std::ostringstream detail;
        for (const auto& rb : ref.brackets) {
            const BracketTerm* match = nullptr;
            for (const auto& gb : got->brackets)
                if (key(gb) == key(rb)) match = &gb;
            if (!match) {
                ok = false;
                detail << "printed-only [U" << rb.j_label << ",V" << rb.m_label << "]; ";
            } else if (!(match->weight == rb.weight)) {
                ok = false;
                detail << "[U" << rb.j_label << ",V" << rb.m_label << "] weight "
                       << match->weight.str() << " vs printed " << rb.weight.str() << "; ";
            }
        }
        for (const auto& gb : got->brackets) {
            bool found = false;
            for (const auto& rb : ref.brackets)
                if (key(gb) == key(rb)) found = true;
            if (!found) {
                ok = false;
                detail << "derived-only [U" << gb.j_label << ",V" << gb.m_label << "]; ";
            }
        }
        d.match = ok;
        if (!ok) {
            d.classification = "bracket-mismatch";
            d.detail = detail.str();
        }
        sec.entries.push_back(d);
    }
    return sec;
}

}  // namespace laxforge
