// Dense univariate polynomials over the rationals: just enough machinery for
// the boundary-piece maximization. Degrees stay at four or below, so clarity
// wins over asymptotics throughout.
#ifndef TERRATRI_POLY_HPP
#define TERRATRI_POLY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "terratri/scalar.hpp"

namespace terratri {

using Poly = std::vector<Rat>;  // coefficients, constant term first; empty = zero

inline void p_trim(Poly& p) {
    while (!p.empty() && num_sgn(p.back()) == 0) p.pop_back();
}

inline int p_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Rat p_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (int i = p_deg(p); i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

inline Poly p_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    p_trim(r);
    return r;
}

inline Poly p_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    p_trim(r);
    return r;
}

inline Poly p_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    p_trim(r);
    return r;
}

inline Poly p_scale(const Poly& a, const Rat& c) {
    Poly r = a;
    for (Rat& v : r) v *= c;
    p_trim(r);
    return r;
}

inline Poly p_deriv(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
    p_trim(r);
    return r;
}

// Remainder of a by b; b nonzero.
inline Poly p_rem(Poly a, const Poly& b) {
    while (p_deg(a) >= p_deg(b)) {
        Rat c = a.back() / b.back();
        int shift = p_deg(a) - p_deg(b);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        p_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient of a by b; the division must come out even.
inline Poly p_divexact(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (p_deg(a) >= p_deg(b)) {
        Rat c = a.back() / b.back();
        int shift = p_deg(a) - p_deg(b);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        p_trim(a);
        if (a.empty()) break;
    }
    p_trim(q);
    return q;
}

// Scale by the absolute value of the leading coefficient; positive scaling
// only, so sign sequences are unchanged.
inline void p_make_monic(Poly& p) {
    if (p.empty()) return;
    Rat lead = p.back();
    if (num_sgn(lead) < 0) lead = -lead;
    for (Rat& c : p) c /= lead;
}

inline Poly p_gcd(Poly a, Poly b) {
    p_trim(a);
    p_trim(b);
    while (!b.empty()) {
        Poly r = p_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    p_make_monic(a);
    return a;
}

inline Poly p_squarefree(const Poly& p) {
    if (p_deg(p) <= 1) return p;
    Poly g = p_gcd(p, p_deriv(p));
    if (p_deg(g) <= 0) return p;
    return p_divexact(p, g);
}

// Exact square root of a nonnegative rational, when one exists.
inline std::optional<Rat> rat_sqrt(const Rat& v) {
    if (num_sgn(v) < 0) return std::nullopt;
    const mpz_class& n = v.get_num();
    const mpz_class& d = v.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rat r(sn, sd);
    r.canonicalize();
    return r;
}

// Sturm sequence: p, p', then negated remainders down to a constant.
inline std::vector<Poly> sturm_chain(Poly p) {
    std::vector<Poly> seq;
    p_trim(p);
    if (p.empty()) return seq;
    p_make_monic(p);
    seq.push_back(p);
    Poly d = p_deriv(seq[0]);
    if (d.empty()) return seq;
    p_make_monic(d);
    seq.push_back(d);
    while (p_deg(seq.back()) > 0) {
        Poly r = p_rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (Rat& c : r) c = -c;
        p_make_monic(r);
        seq.push_back(std::move(r));
    }
    return seq;
}

inline int sturm_variations(const std::vector<Poly>& seq, const Rat& x) {
    int variations = 0, last = 0;
    for (const Poly& p : seq) {
        int s = num_sgn(p_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Number of distinct roots in (a, b]; requires p(a) != 0.
inline int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b) {
    if (seq.empty()) return 0;
    return sturm_variations(seq, a) - sturm_variations(seq, b);
}

// One real root of a square-free polynomial: either pinned exactly or
// bracketed strictly inside (lo, hi) with nonzero endpoint values.
struct RootBracket {
    Rat lo, hi;
    bool exact = false;
    Rat root{};
};

// Root isolation output: the square-free polynomial the brackets refer to
// (exactly-found roots are divided out of it) plus the roots in ascending
// order.
struct IsolatedRoots {
    Poly p;
    std::vector<RootBracket> roots;
};

// Distinct real roots of p strictly inside (lo, hi), as exact values or
// isolating brackets. Roots exactly at lo or hi are excluded.
inline IsolatedRoots isolate_roots(Poly p, const Rat& lo, const Rat& hi) {
    std::vector<RootBracket> out;
    p = p_squarefree(p);
    p_trim(p);
    if (p_deg(p) <= 0) return IsolatedRoots{std::move(p), std::move(out)};
    auto strip_at = [&](const Rat& x) {
        while (!p.empty() && num_sgn(p_eval(p, x)) == 0) p = p_divexact(p, Poly{-x, Rat(1)});
    };
    strip_at(lo);
    strip_at(hi);
    for (;;) {
        if (p_deg(p) <= 0) break;
        // Degrees one and two are solved in closed form so rational roots
        // come out exact instead of bracketed.
        if (p_deg(p) == 1) {
            Rat r = -p[0] / p[1];
            if (lo < r && r < hi) out.push_back(RootBracket{r, r, true, r});
            p = Poly{Rat(1)};
            break;
        }
        if (p_deg(p) == 2) {
            if (auto s = rat_sqrt(p[1] * p[1] - 4 * p[2] * p[0])) {
                Rat r1 = (-p[1] - *s) / (2 * p[2]);
                Rat r2 = (-p[1] + *s) / (2 * p[2]);
                for (const Rat& r : {r1, r2})
                    if (lo < r && r < hi) out.push_back(RootBracket{r, r, true, r});
                p = Poly{Rat(1)};
                break;
            }
        }
        std::vector<Poly> chain = sturm_chain(p);
        std::vector<std::pair<Rat, Rat>> work{{lo, hi}};
        std::vector<RootBracket> brackets;
        bool restarted = false;
        while (!work.empty() && !restarted) {
            auto [a, b] = work.back();
            work.pop_back();
            int k = sturm_count(chain, a, b);
            if (k == 0) continue;
            if (k == 1) {
                brackets.push_back(RootBracket{a, b, false, Rat(0)});
                continue;
            }
            Rat m = (a + b) / 2;
            if (num_sgn(p_eval(p, m)) == 0) {
                // Split point happens to be a root: record it exactly, strip
                // its factor and redo the isolation on the reduced polynomial.
                out.push_back(RootBracket{m, m, true, m});
                p = p_divexact(p, Poly{-m, Rat(1)});
                restarted = true;
                break;
            }
            work.emplace_back(a, m);
            work.emplace_back(m, b);
        }
        if (!restarted) {
            for (auto& br : brackets) out.push_back(std::move(br));
            break;
        }
    }
    // Shrink brackets off any exactly-known roots so ordering by position is
    // unambiguous; exact roots were divided out, so each bracket's own root
    // differs from every exact value.
    for (auto& br : out) {
        if (br.exact) continue;
        for (const auto& ex : out) {
            if (!ex.exact) continue;
            while (br.lo < ex.root && ex.root < br.hi) {
                Rat mid = (br.lo + br.hi) / 2;
                if (num_sgn(p_eval(p, mid)) == 0) {
                    br = RootBracket{mid, mid, true, mid};
                    break;
                }
                if (num_sgn(p_eval(p, mid)) == num_sgn(p_eval(p, br.lo)))
                    br.lo = mid;
                else
                    br.hi = mid;
            }
            if (br.exact) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) {
        Rat kx = x.exact ? x.root : x.lo;
        Rat ky = y.exact ? y.root : y.lo;
        if (kx != ky) return kx < ky;
        return x.exact && !y.exact;
    });
    return IsolatedRoots{std::move(p), std::move(out)};
}

// Sign of h at the single root of square-free p inside the bracket. Decided
// exactly: a common factor of p and h makes the sign zero; otherwise the
// bracket shrinks by bisection until h is sign-constant across it.
inline int sign_at_root(const Poly& p, RootBracket br, const Poly& h) {
    if (br.exact) return num_sgn(p_eval(h, br.root));
    Poly hh = h;
    p_trim(hh);
    if (hh.empty()) return 0;
    Poly g = p_gcd(p, hh);
    if (p_deg(g) >= 1) {
        // g divides p, so g is nonzero at the bracket endpoints; a root of g
        // inside the bracket must be the bracketed root itself.
        std::vector<Poly> gchain = sturm_chain(g);
        if (sturm_count(gchain, br.lo, br.hi) > 0) return 0;
    }
    std::vector<Poly> hchain = sturm_chain(hh);
    int plo = num_sgn(p_eval(p, br.lo));
    for (;;) {
        if (num_sgn(p_eval(hh, br.lo)) != 0 && num_sgn(p_eval(hh, br.hi)) != 0 &&
            sturm_count(hchain, br.lo, br.hi) == 0)
            return num_sgn(p_eval(hh, br.lo));
        Rat mid = (br.lo + br.hi) / 2;
        int pm = num_sgn(p_eval(p, mid));
        if (pm == 0) return num_sgn(p_eval(hh, mid));
        if (pm == plo) {
            br.lo = mid;
        } else {
            br.hi = mid;
        }
    }
}

} // namespace terratri

#endif
