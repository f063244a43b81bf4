#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qtem/element_matrices.hpp"
#include "qtem/exact_oracle.hpp"
#include "qtem/geometry.hpp"
#include "qtem/matrix_kind.hpp"
#include "qtem/quadrature.hpp"
#include "qtem/shape.hpp"

namespace qtem {

// One randomly drawn test triangle: corners on a dyadic grid (so they are
// exactly representable and convert losslessly to rationals) plus a random
// orientation sign per edge.
struct TriangleSample {
    std::array<Point2, 3> corners{};
    std::array<int, 3> signs{1, 1, 1};
};

// Deterministic sample stream. Raw engine output is reduced directly so the
// stream does not depend on library distribution internals. Triangles with
// area below one percent of their bounding box are rejected to keep the
// samples well shaped.
inline std::vector<TriangleSample> make_samples(std::size_t n,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto coord = [&rng]() {
        const std::int64_t k =
            static_cast<std::int64_t>(rng() % 2049u) - 1024;
        return static_cast<double>(k) / 1024.0;
    };
    std::vector<TriangleSample> out;
    out.reserve(n);
    while (out.size() < n) {
        TriangleSample s;
        for (auto& p : s.corners) p = {coord(), coord()};
        const double ux = s.corners[1].x - s.corners[0].x;
        const double uy = s.corners[1].y - s.corners[0].y;
        const double vx = s.corners[2].x - s.corners[0].x;
        const double vy = s.corners[2].y - s.corners[0].y;
        const double area2 = std::abs(ux * vy - vx * uy);
        double xmin = s.corners[0].x, xmax = xmin;
        double ymin = s.corners[0].y, ymax = ymin;
        for (const auto& p : s.corners) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        const double bbox = (xmax - xmin) * (ymax - ymin);
        for (auto& sg : s.signs) sg = (rng() & 1u) ? 1 : -1;
        if (bbox <= 0.0 || area2 / 2.0 < 0.01 * bbox) continue;
        out.push_back(s);
    }
    return out;
}

// Per-basis field values at a point, for the numerical integration oracle.
// Value families evaluate the shapes directly; derivative families use wide
// centered differences, which are exact for these polynomial fields up to
// rounding and independent of any closed-form derivative expression.
inline std::function<Vec6(const Vec3&)> family_evaluator(
    const TriangleGeometry& g, FieldFamily family) {
    const double h = 0.5 * std::sqrt(g.area);
    const auto at = [g](double x, double y) {
        return area_coordinates(g, {x, y});
    };
    switch (family) {
        case FieldFamily::N:
            return [](const Vec3& L) { return eval_N(L); };
        case FieldFamily::dNx:
            return [g, h, at](const Vec3& L) {
                const Point2 p = point_at(g, L);
                const Vec6 fp = eval_N(at(p.x + h, p.y));
                const Vec6 fm = eval_N(at(p.x - h, p.y));
                Vec6 out;
                for (int i = 0; i < 6; ++i) out[i] = (fp[i] - fm[i]) / (2 * h);
                return out;
            };
        case FieldFamily::dNy:
            return [g, h, at](const Vec3& L) {
                const Point2 p = point_at(g, L);
                const Vec6 fp = eval_N(at(p.x, p.y + h));
                const Vec6 fm = eval_N(at(p.x, p.y - h));
                Vec6 out;
                for (int i = 0; i < 6; ++i) out[i] = (fp[i] - fm[i]) / (2 * h);
                return out;
            };
        case FieldFamily::U:
            return [g](const Vec3& L) { return eval_UV(g, L).u; };
        case FieldFamily::V:
            return [g](const Vec3& L) { return eval_UV(g, L).v; };
        case FieldFamily::dUy:
            return [g, h, at](const Vec3& L) {
                const Point2 p = point_at(g, L);
                const Vec6 fp = eval_UV(g, at(p.x, p.y + h)).u;
                const Vec6 fm = eval_UV(g, at(p.x, p.y - h)).u;
                Vec6 out;
                for (int i = 0; i < 6; ++i) out[i] = (fp[i] - fm[i]) / (2 * h);
                return out;
            };
        case FieldFamily::dVx:
            return [g, h, at](const Vec3& L) {
                const Point2 p = point_at(g, L);
                const Vec6 fp = eval_UV(g, at(p.x + h, p.y)).v;
                const Vec6 fm = eval_UV(g, at(p.x - h, p.y)).v;
                Vec6 out;
                for (int i = 0; i < 6; ++i) out[i] = (fp[i] - fm[i]) / (2 * h);
                return out;
            };
    }
    throw UnsupportedKind("family_evaluator: unknown field family");
}

// Numeric integration oracle for one matrix kind on one triangle.
inline Mat6d quadrature_element_matrix(MatrixKind kind,
                                       const TriangleGeometry& g,
                                       const QuadratureRule& rule) {
    const KindFamilies fam = kind_families(kind);
    return integrate_bilinear(rule, g.area, family_evaluator(g, fam.row),
                              family_evaluator(g, fam.col));
}

struct KindCheck {
    MatrixKind kind{};
    double max_rel_quad_err = 0.0; // worst relative Frobenius deviation
    bool exact_match_all = true;   // closed form == exact integrals, all samples
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t n_triangles = 0;
    std::array<KindCheck, 16> kinds{};
    // Adjudication of the two circulating candidates for entry (3, 3) of
    // dVx_dVx, counted per sample against the exact integration oracle.
    std::size_t entry33_impl_matches = 0;    // numerator l3^2 c1^2 b3^2
    std::size_t entry33_variant_matches = 0; // numerator l3^2 b1^2 c3^2

    bool all_ok(double quad_tol) const {
        for (const auto& kc : kinds) {
            if (!kc.exact_match_all || !(kc.max_rel_quad_err <= quad_tol))
                return false;
        }
        return entry33_impl_matches == n_triangles;
    }
};

namespace detail {

struct SampleOutcome {
    std::array<double, 16> rel_err{};
    std::array<bool, 16> exact_eq{};
    bool impl33 = false;
    bool variant33 = false;
};

inline double rel_frobenius_diff(const Mat6d& a, const Mat6d& b) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 36; ++i) {
        const double d = a.e[i] - b.e[i];
        num += d * d;
        den += a.e[i] * a.e[i];
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

inline SampleOutcome check_sample(const TriangleSample& s,
                                  const QuadratureRule& rule) {
    SampleOutcome out;

    // float path with true signed edge lengths
    TriangleGeometry g = compute_geometry(s.corners);
    g = with_edge_signs(g, s.signs);
    const ElementCoeffs<double> ec = element_coeffs(g);

    // exact path: rationals with unit edge lengths and positive signs; the
    // edge length and sign factors scale rows and columns identically in the
    // closed forms and in the defining integrals, so they cancel from the
    // comparison
    const RationalTriangle rt = rational_geometry(s.corners);
    ElementCoeffs<Rational> rec;
    for (int k = 0; k < 3; ++k) {
        rec.b[k] = rt.b[k];
        rec.c[k] = rt.c[k];
        rec.l[k] = Rational(1);
    }
    rec.area = rt.area;
    const ExactFamilyTable table = build_family_table(rt);

    for (std::size_t ki = 0; ki < all_matrix_kinds.size(); ++ki) {
        const MatrixKind kind = all_matrix_kinds[ki];
        const Mat6d closed = element_matrix_t(kind, ec);
        const Mat6d quad = quadrature_element_matrix(kind, g, rule);
        out.rel_err[ki] = rel_frobenius_diff(closed, quad);

        const Mat6<Rational> closed_exact = element_matrix_t(kind, rec);
        const Mat6<Rational> oracle = exact_element_matrix(kind, rt, table);
        out.exact_eq[ki] = (closed_exact == oracle);
        if (kind == MatrixKind::dVx_dVx) {
            out.impl33 = (closed_exact(2, 2) == oracle(2, 2));
            out.variant33 = (dvx_dvx_variant_entry_33(rec) == oracle(2, 2));
        }
    }
    return out;
}

inline unsigned configured_threads() {
    if (const char* env = std::getenv("QTEM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, n) on the configured number of threads. Results
// must be written to per-index slots by fn; the reduction done by the caller
// over those slots is then independent of the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned nt =
        static_cast<unsigned>(std::min<std::size_t>(configured_threads(), n));
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (std::size_t i = t; i < n; i += nt) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace detail

// Cross-checks every closed-form matrix against both oracles over a
// deterministic random triangle sweep.
inline VerifyReport run_verify(std::size_t n_triangles, std::uint64_t seed) {
    VerifyReport rep;
    rep.seed = seed;
    rep.n_triangles = n_triangles;
    for (std::size_t ki = 0; ki < all_matrix_kinds.size(); ++ki)
        rep.kinds[ki].kind = all_matrix_kinds[ki];

    const std::vector<TriangleSample> samples = make_samples(n_triangles, seed);
    const QuadratureRule rule = make_rule(5);
    std::vector<detail::SampleOutcome> slots(samples.size());
    detail::parallel_for(samples.size(), [&](std::size_t i) {
        slots[i] = detail::check_sample(samples[i], rule);
    });

    for (const auto& slot : slots) {
        for (std::size_t ki = 0; ki < 16; ++ki) {
            rep.kinds[ki].max_rel_quad_err =
                std::max(rep.kinds[ki].max_rel_quad_err, slot.rel_err[ki]);
            rep.kinds[ki].exact_match_all =
                rep.kinds[ki].exact_match_all && slot.exact_eq[ki];
        }
        rep.entry33_impl_matches += slot.impl33 ? 1 : 0;
        rep.entry33_variant_matches += slot.variant33 ? 1 : 0;
    }
    return rep;
}

// Fixed-format text rendering, identical for identical reports.
inline std::string render_report(const VerifyReport& rep, double quad_tol) {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "verify: %zu triangles, seed %llu, quadrature tolerance %.1e\n",
                  rep.n_triangles,
                  static_cast<unsigned long long>(rep.seed), quad_tol);
    out += buf;
    for (const auto& kc : rep.kinds) {
        const bool ok =
            kc.exact_match_all && kc.max_rel_quad_err <= quad_tol;
        const std::string name(kind_name(kc.kind));
        std::snprintf(buf, sizeof(buf),
                      "  %-10s exact=%s quad_rel_err=%.3e %s\n", name.c_str(),
                      kc.exact_match_all ? "yes" : "NO", kc.max_rel_quad_err,
                      ok ? "ok" : "FAIL");
        out += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "  dVx_dVx entry (3,3): numerator l3^2*c1^2*b3^2 matched the "
                  "exact integral in %zu of %zu samples\n",
                  rep.entry33_impl_matches, rep.n_triangles);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "  dVx_dVx entry (3,3): variant numerator l3^2*b1^2*c3^2 "
                  "matched in %zu of %zu samples\n",
                  rep.entry33_variant_matches, rep.n_triangles);
    out += buf;
    out += rep.all_ok(quad_tol) ? "verify: PASS\n" : "verify: FAIL\n";
    return out;
}

} // namespace qtem
