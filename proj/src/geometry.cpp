#include "paradec/geometry.hpp"

namespace paradec {

Magnitude norm(const Vec& v) {
    Magnitude acc = Magnitude::zero();
    for (const auto& c : v) acc = Magnitude::max(acc, c.magnitude());
    return acc;
}

Region Region::closed_ball(Vec center, Magnitude r) {
    return {Kind::ClosedBall, std::move(center), std::move(r), 0};
}
Region Region::open_ball(Vec center, Magnitude r) {
    return {Kind::OpenBall, std::move(center), std::move(r), 0};
}
Region Region::sphere(Vec center, Magnitude r) {
    return {Kind::Sphere, std::move(center), std::move(r), 0};
}
Region Region::punctured_ball(Vec center, Magnitude r) {
    return {Kind::PuncturedBall, std::move(center), std::move(r), 0};
}
Region Region::product_sphere_ball(const DescPtr& d, int n, int split, Magnitude r) {
    return {Kind::ProductSphereBall, zero_vec(d, n), std::move(r), split};
}
Region Region::product_open_ball_sphere(const DescPtr& d, int n, int split, Magnitude r) {
    return {Kind::ProductOpenBallSphere, zero_vec(d, n), std::move(r), split};
}

bool Region::contains(const Vec& v) const {
    if (v.size() != center.size()) throw std::invalid_argument("dimension mismatch");
    if (radius.is_zero()) throw std::invalid_argument("region radius must be positive");
    Vec diff = vec_sub(v, center);
    switch (kind) {
        case Kind::ClosedBall: return norm(diff) <= radius;
        case Kind::OpenBall: return norm(diff) < radius;
        case Kind::Sphere: return norm(diff) == radius;
        case Kind::PuncturedBall: return !vec_is_zero(diff) && norm(diff) <= radius;
        case Kind::ProductSphereBall:
        case Kind::ProductOpenBallSphere: {
            Vec head(diff.begin(), diff.begin() + split);
            Vec tail(diff.begin() + split, diff.end());
            if (kind == Kind::ProductSphereBall)
                return norm(head) == radius && norm(tail) <= radius;
            return norm(head) < radius && norm(tail) == radius;
        }
    }
    throw std::logic_error("unreachable");
}

std::string Region::kind_str() const {
    switch (kind) {
        case Kind::ClosedBall: return "closed-ball";
        case Kind::OpenBall: return "open-ball";
        case Kind::Sphere: return "sphere";
        case Kind::PuncturedBall: return "punctured-ball";
        case Kind::ProductSphereBall: return "product-sphere-ball";
        case Kind::ProductOpenBallSphere: return "product-open-ball-sphere";
    }
    return "?";
}

DisplacementReport displacement_audit(const std::vector<AffineMap>& generators, const Vec& x,
                                      const Magnitude& r, const std::vector<Vec>& samples) {
    DisplacementReport rep;
    for (const auto& g : generators) {
        Magnitude disp = norm(vec_sub(g.apply(x), x));
        bool strict = disp < r;
        rep.generators.push_back({disp, strict});
        rep.all_strict = rep.all_strict && strict;
    }
    Region cb = Region::closed_ball(x, r), ob = Region::open_ball(x, r), sp = Region::sphere(x, r);
    std::vector<AffineMap> with_inverses = generators;
    for (const auto& g : generators) with_inverses.push_back(g.inverse());
    for (const Vec& s : samples) {
        for (const Region* reg : {&cb, &ob, &sp}) {
            if (!reg->contains(s)) continue;
            for (const auto& g : with_inverses) {
                ++rep.samples_checked;
                if (!reg->contains(g.apply(s))) ++rep.samples_failed;
            }
        }
    }
    return rep;
}

std::vector<Vec> cover_ball(int i, int j, int n, const ValuationRing& ring) {
    if (j < i) throw std::invalid_argument("cover_ball needs j >= i");
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    if (!ring.residue_cardinality) throw std::invalid_argument("infinite residue field");
    const DescPtr& d = ring.desc;

    std::vector<FieldElement> digits = ring.residue_digits();
    // per-coordinate translations: sum_{s=0}^{j-i-1} pi^{i+s} t_s
    std::vector<FieldElement> coord_values;
    long depth = j - i;
    std::vector<size_t> idx(static_cast<size_t>(depth), 0);
    if (depth == 0) {
        coord_values.push_back(FieldElement::zero(d));
    } else {
        while (true) {
            FieldElement acc = FieldElement::zero(d);
            for (long s = 0; s < depth; ++s)
                acc = acc + ring.uniformizer_pow(i + s) * digits[idx[static_cast<size_t>(s)]];
            coord_values.push_back(std::move(acc));
            long s = 0;
            while (s < depth) {
                if (++idx[static_cast<size_t>(s)] < digits.size()) break;
                idx[static_cast<size_t>(s)] = 0;
                ++s;
            }
            if (s == depth) break;
        }
    }

    std::vector<Vec> out;
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    while (true) {
        Vec v;
        v.reserve(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) v.push_back(coord_values[pick[static_cast<size_t>(c)]]);
        out.push_back(std::move(v));
        int c = n - 1;
        while (c >= 0) {
            if (++pick[static_cast<size_t>(c)] < coord_values.size()) break;
            pick[static_cast<size_t>(c)] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return out;
}

CoverCheck cover_ball_verify(int i, int j, int n, const ValuationRing& ring,
                             const std::vector<Vec>& translates) {
    CoverCheck check;
    if (!ring.residue_cardinality) throw std::invalid_argument("infinite residue field");
    const DescPtr& d = ring.desc;
    long base = d->mag_base;

    Int q = *ring.residue_cardinality;
    Int expected = 1;
    for (int k = 0; k < n * (j - i); ++k) expected *= q;
    check.expected_count = expected;
    check.count_ok = Int(translates.size()) == expected;

    Magnitude r_inner = Magnitude::power(base, j);

    auto contained_in = [&](const Vec& x, const Vec& a) {
        // x in a + B[0, base^-j]
        Vec diff = vec_sub(x, a);
        return norm(diff) <= r_inner;
    };

    // Grid = the translates themselves plus a deeper perturbation of each,
    // which exhausts the outer ball modulo pi^j and probes ball interiors.
    check.pairwise_disjoint = true;
    for (size_t s = 0; s + 1 < translates.size() && check.pairwise_disjoint; ++s)
        for (size_t t = s + 1; t < translates.size(); ++t) {
            // two cosets intersect iff the difference lies in B[0, base^-j]
            if (contained_in(translates[s], translates[t])) {
                check.pairwise_disjoint = false;
                check.note = "translates " + std::to_string(s) + " and " + std::to_string(t) +
                             " overlap";
                break;
            }
        }

    check.exhaustive = true;
    FieldElement bump = ring.uniformizer_pow(j + 1);
    Magnitude r_outer = Magnitude::power(base, i);
    for (const Vec& g : translates) {
        for (int variant = 0; variant < 2; ++variant) {
            Vec x = g;
            if (variant == 1) x[0] = x[0] + bump;
            if (norm(x) > r_outer) {
                check.exhaustive = false;
                check.note = "grid point outside the outer ball";
                break;
            }
            long hits = 0;
            for (const Vec& a : translates)
                if (contained_in(x, a)) ++hits;
            if (hits != 1) {
                check.exhaustive = false;
                check.note = "grid point covered " + std::to_string(hits) + " times";
                break;
            }
        }
        if (!check.exhaustive) break;
    }
    return check;
}

}  // namespace paradec
