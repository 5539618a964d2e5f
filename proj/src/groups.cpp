#include "paradec/groups.hpp"

namespace paradec {

Mat magnus(const DescPtr& d, long i) {
    if (i < 0) throw std::invalid_argument("Magnus index must be nonnegative");
    if (i == 0) return Mat::from_ints(d, 2, {1, 1, 1, 2});
    return Mat::from_ints(d, 2, {4 * i * i + 1, 2 * i, 2 * i, 1});
}

namespace {

Magnitude entry_deviation(const Mat& m) {
    // max over |a_ii - 1| and |a_ij|, i != j
    const DescPtr& d = m.descriptor();
    Magnitude worst = Magnitude::zero();
    FieldElement one = FieldElement::one(d);
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            FieldElement v = i == j ? m.at(i, j) - one : m.at(i, j);
            worst = Magnitude::max(worst, v.magnitude());
        }
    return worst;
}

}  // namespace

EpsPair magnus_eps_pair(const DescPtr& padic_field, const Magnitude& eps) {
    if (!padic_field || padic_field->kind != FieldKind::RationalsPadic)
        throw std::invalid_argument("magnus_eps_pair expects Q with a p-adic valuation");
    long p = padic_field->p;
    auto admissible = [&](long m) {
        long long n = 1;
        for (long k = 0; k < m; ++k) n *= p;
        Mat a = magnus(padic_field, n);
        return std::make_pair(entry_deviation(a) < eps, a);
    };
    for (long m = 1;; ++m) {
        auto [ok, a] = admissible(m);
        if (!ok) continue;
        auto [ok2, a2] = admissible(m + 1);
        if (!ok2) throw std::logic_error("entry magnitudes not monotone in the prime power");
        return {a, a2, m, m + 1};
    }
}

TransPair transcendental_pair(const DescPtr& fn_field, const Magnitude& eps) {
    if (!fn_field || !fn_field->polynomial_elements())
        throw std::invalid_argument("transcendental_pair expects a rational function field");
    long p = fn_field->characteristic();
    UniPoly q = p == 2 ? UniPoly::parse(2, "s^2+s+1") : UniPoly::parse(p, "2s+1");

    FieldElement t = FieldElement::rat_func(fn_field, UniPoly::variable(p),
                                            UniPoly::constant(p, 1));
    long long e = 0;
    if (!fn_field->trivially_valued()) {
        ValuationRing ring = make_field(fn_field);
        e = 1;
        while (!(ring.uniformizer_pow(e).magnitude() < eps)) ++e;
        t = ring.uniformizer_pow(e);
    }

    // q(t^2) evaluated in the field
    FieldElement qt = FieldElement::zero(fn_field);
    FieldElement t2 = t * t;
    for (long k = q.degree(); k >= 0; --k)
        qt = qt * t2 + FieldElement::rational(fn_field, q.coeff(k));
    FieldElement qinv = qt.inverse();
    FieldElement zero = FieldElement::zero(fn_field);

    Mat A = Mat::from_entries(fn_field, 2, {qt, t, zero, qinv});
    Mat B = Mat::from_entries(fn_field, 2, {qt, zero, qinv * qinv * t, qinv});
    return {A, B, t, e, q};
}

std::string GroupSpec::str() const {
    std::string ns = std::to_string(n);
    switch (family) {
        case Family::GL_D: return "GL(" + ns + ",D)";
        case Family::SL_D: return "SL(" + ns + ",D)";
        case Family::SL_R_eps:
            return "SL(" + ns + "," + (ring == Ring::Integers ? "Z" : "D") + "," + eps.str() + ")";
        case Family::SA_D_eps: return "SA(" + ns + ",D," + eps.str() + ")";
        case Family::SA_D_K: return "SA(" + ns + ",D,K)";
        case Family::SA_L: return "SA(" + ns + "," + (ring == Ring::Integers ? "Z" : "D") + ")";
    }
    return "?";
}

namespace {

bool in_D(const FieldElement& v) {
    Magnitude one = Magnitude::one(v.descriptor()->mag_base);
    return v.magnitude() <= one;
}

bool in_ring(const FieldElement& v, GroupSpec::Ring ring) {
    return ring == GroupSpec::Ring::Integers ? v.is_integer_image() : in_D(v);
}

void check_entries_in_ring(const Mat& m, GroupSpec::Ring ring, MembershipReport* rep) {
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (!in_ring(m.at(i, j), ring)) {
                rep->ok = false;
                rep->diagnostics.push_back("entry (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") = " + m.at(i, j).str() +
                                           " outside the coefficient ring");
            }
}

void check_eps_close(const Mat& m, const Magnitude& eps, MembershipReport* rep) {
    FieldElement one = FieldElement::one(m.descriptor());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            FieldElement v = i == j ? m.at(i, j) - one : m.at(i, j);
            if (!(v.magnitude() < eps)) {
                rep->ok = false;
                std::string what = i == j ? "|a_ii - 1|" : "|a_ij|";
                rep->diagnostics.push_back(what + " = " + v.magnitude().str() + " at (" +
                                           std::to_string(i) + "," + std::to_string(j) +
                                           ") is not < " + eps.str());
            }
        }
}

void check_unimodular(const Mat& m, MembershipReport* rep) {
    if (m.det() != FieldElement::one(m.descriptor())) {
        rep->ok = false;
        rep->diagnostics.push_back("det = " + m.det().str() + " != 1");
    }
}

}  // namespace

MembershipReport group_membership(const Mat& m, const GroupSpec& spec) {
    MembershipReport rep;
    if (m.n() != spec.n) {
        rep.ok = false;
        rep.diagnostics.push_back("dimension mismatch");
        return rep;
    }
    switch (spec.family) {
        case GroupSpec::Family::GL_D: {
            check_entries_in_ring(m, GroupSpec::Ring::D, &rep);
            Magnitude dm = m.det().magnitude();
            if (!dm.is_one()) {
                rep.ok = false;
                rep.diagnostics.push_back("|det| = " + dm.str() + " != 1");
            }
            break;
        }
        case GroupSpec::Family::SL_D:
            check_entries_in_ring(m, GroupSpec::Ring::D, &rep);
            check_unimodular(m, &rep);
            break;
        case GroupSpec::Family::SL_R_eps:
            check_entries_in_ring(m, spec.ring, &rep);
            check_unimodular(m, &rep);
            check_eps_close(m, spec.eps, &rep);
            break;
        case GroupSpec::Family::SA_D_eps:
        case GroupSpec::Family::SA_D_K:
        case GroupSpec::Family::SA_L:
            return group_membership(AffineMap::from_linear(m), spec);
    }
    return rep;
}

MembershipReport group_membership(const AffineMap& f, const GroupSpec& spec) {
    MembershipReport rep;
    if (f.dim() != spec.n) {
        rep.ok = false;
        rep.diagnostics.push_back("dimension mismatch");
        return rep;
    }
    auto check_translation = [&](GroupSpec::Ring ring) {
        for (size_t k = 0; k < f.translation.size(); ++k)
            if (!in_ring(f.translation[k], ring)) {
                rep.ok = false;
                rep.diagnostics.push_back("translation component " + std::to_string(k) + " = " +
                                          f.translation[k].str() +
                                          " outside the coefficient ring");
            }
    };
    switch (spec.family) {
        case GroupSpec::Family::GL_D:
        case GroupSpec::Family::SL_D:
        case GroupSpec::Family::SL_R_eps: {
            if (!f.is_linear()) {
                rep.ok = false;
                rep.diagnostics.push_back("affine map with nonzero translation in a linear group");
            }
            MembershipReport lin = group_membership(f.linear, spec);
            rep.ok = rep.ok && lin.ok;
            rep.diagnostics.insert(rep.diagnostics.end(), lin.diagnostics.begin(),
                                   lin.diagnostics.end());
            break;
        }
        case GroupSpec::Family::SA_D_eps: {
            GroupSpec lin_spec{GroupSpec::Family::SL_R_eps, spec.n, GroupSpec::Ring::D, spec.eps};
            MembershipReport lin = group_membership(f.linear, lin_spec);
            rep.ok = lin.ok;
            rep.diagnostics = lin.diagnostics;
            check_translation(GroupSpec::Ring::D);
            break;
        }
        case GroupSpec::Family::SA_D_K: {
            GroupSpec lin_spec{GroupSpec::Family::SL_D, spec.n};
            MembershipReport lin = group_membership(f.linear, lin_spec);
            rep.ok = lin.ok;
            rep.diagnostics = lin.diagnostics;
            break;  // translation unrestricted
        }
        case GroupSpec::Family::SA_L: {
            GroupSpec lin_spec{GroupSpec::Family::SL_D, spec.n};
            MembershipReport lin;
            check_entries_in_ring(f.linear, spec.ring, &lin);
            check_unimodular(f.linear, &lin);
            rep.ok = lin.ok;
            rep.diagnostics = lin.diagnostics;
            check_translation(spec.ring);
            break;
        }
    }
    return rep;
}

IsometryReport isometry_audit(const Mat& m, const std::vector<Vec>& samples) {
    IsometryReport rep;
    const DescPtr& d = m.descriptor();
    Magnitude one = Magnitude::one(d->mag_base);

    FieldElement det = m.det();
    bool det_unit = !det.is_zero() && det.magnitude().is_one();

    bool entries_ok = true;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) entries_ok = entries_ok && in_D(m.at(i, j));

    bool colmax_ok = true;
    for (int j = 0; j < m.n(); ++j) {
        Magnitude colmax = Magnitude::zero();
        for (int i = 0; i < m.n(); ++i) colmax = Magnitude::max(colmax, m.at(i, j).magnitude());
        colmax_ok = colmax_ok && colmax == one;
    }

    rep.det_and_column_max = det_unit && colmax_ok;
    rep.det_and_entries = det_unit && entries_ok;

    if (!det.is_zero()) {
        Mat inv = m.inverse();
        bool inv_ok = true;
        for (int i = 0; i < m.n(); ++i)
            for (int j = 0; j < m.n(); ++j) inv_ok = inv_ok && in_D(inv.at(i, j));
        rep.inverse_entries = entries_ok && inv_ok;
    } else {
        rep.inverse_entries = false;
        rep.notes.push_back("singular matrix");
    }

    GroupSpec gl{GroupSpec::Family::GL_D, m.n()};
    rep.gl_membership = group_membership(m, gl).ok;

    rep.norm_preserving_on_samples = true;
    for (const Vec& x : samples) {
        Magnitude nx = Magnitude::zero(), nmx = Magnitude::zero();
        for (const auto& c : x) nx = Magnitude::max(nx, c.magnitude());
        Vec mx = m.apply(x);
        for (const auto& c : mx) nmx = Magnitude::max(nmx, c.magnitude());
        if (Magnitude::compare(nx, nmx) != 0) {
            rep.norm_preserving_on_samples = false;
            rep.notes.push_back("norm changes on " + vec_str(x));
            break;
        }
    }
    return rep;
}

std::vector<AffineMap> affinize(const std::vector<Mat>& basis, const Vec& anchor) {
    std::vector<AffineMap> out;
    out.reserve(basis.size());
    for (const Mat& a : basis) {
        if (a.sub_identity().det().is_zero())
            throw std::invalid_argument("basis matrix fixes a nonzero vector (det(M - I) = 0)");
        Vec u = vec_sub(anchor, a.apply(anchor));  // (I - A) anchor
        out.push_back(AffineMap::make(a, std::move(u)));
    }
    return out;
}

AffineMap embed(const AffineMap& g, int target_n, EmbedMode mode, const std::vector<int>& gamma) {
    const DescPtr& d = g.descriptor();
    int n = g.dim();
    switch (mode) {
        case EmbedMode::Corner: {
            if (target_n < n) throw std::invalid_argument("corner embedding needs target >= source");
            Mat L(d, target_n);
            Vec t = zero_vec(d, target_n);
            for (int i = 0; i < target_n; ++i)
                for (int j = 0; j < target_n; ++j)
                    L.set(i, j, i < n && j < n
                                    ? g.linear.at(i, j)
                                    : (i == j ? FieldElement::one(d) : FieldElement::zero(d)));
            for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = g.translation[static_cast<size_t>(i)];
            return AffineMap::make(std::move(L), std::move(t));
        }
        case EmbedMode::Diagonal:
        case EmbedMode::Shifted1:
        case EmbedMode::Shifted2: {
            if (n != 2) throw std::invalid_argument("block embeddings act on 2x2 maps");
            int offset = mode == EmbedMode::Shifted2 ? 1 : 0;
            int copies = (target_n - offset) / 2;
            bool parity_ok = mode == EmbedMode::Diagonal ? target_n % 2 == 0 : target_n % 2 == 1;
            if (!parity_ok || copies < 1)
                throw std::invalid_argument("embedding does not fit the target dimension");
            Mat L = Mat::identity(d, target_n);
            Vec t = zero_vec(d, target_n);
            for (int c = 0; c < copies; ++c) {
                int base = offset + 2 * c;
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) L.set(base + i, base + j, g.linear.at(i, j));
                    t[static_cast<size_t>(base + i)] = g.translation[static_cast<size_t>(i)];
                }
            }
            return AffineMap::make(std::move(L), std::move(t));
        }
        case EmbedMode::Permutation: {
            if (static_cast<int>(gamma.size()) != n || target_n != n)
                throw std::invalid_argument("permutation must cover all coordinates");
            Mat P(d, n);
            for (int j = 0; j < n; ++j) P.set(gamma[static_cast<size_t>(j)], j, FieldElement::one(d));
            Mat Pinv = P.inverse();
            AffineMap pm = AffineMap::from_linear(P);
            AffineMap pminv = AffineMap::from_linear(Pinv);
            return pm.compose(g).compose(pminv);
        }
    }
    throw std::logic_error("unreachable");
}

FixedPointSet fixed_points(const AffineMap& f) {
    const DescPtr& d = f.descriptor();
    int n = f.dim();
    // Solve (L - I) x = -tau by exact Gauss-Jordan elimination.
    Mat A = f.linear.sub_identity();
    Vec rhs = f.translation;
    for (auto& v : rhs) v = -v;

    std::vector<std::vector<FieldElement>> aug;
    for (int i = 0; i < n; ++i) {
        std::vector<FieldElement> row;
        for (int j = 0; j < n; ++j) row.push_back(A.at(i, j));
        row.push_back(rhs[static_cast<size_t>(i)]);
        aug.push_back(std::move(row));
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (!aug[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[static_cast<size_t>(r)], aug[static_cast<size_t>(pr)]);
        FieldElement inv = aug[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (int j = c; j <= n; ++j)
            aug[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                aug[static_cast<size_t>(r)][static_cast<size_t>(j)] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            FieldElement factor = aug[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (factor.is_zero()) continue;
            for (int j = c; j <= n; ++j)
                aug[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    aug[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    factor * aug[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }

    FixedPointSet out;
    // inconsistent row: 0 = nonzero
    for (int i = r; i < n; ++i)
        if (!aug[static_cast<size_t>(i)][static_cast<size_t>(n)].is_zero()) {
            out.kind = FixedPointSet::Kind::NoneNonzero;
            out.any_fixed_point = false;
            return out;
        }

    Vec particular = zero_vec(d, n);
    for (int k = 0; k < r; ++k)
        particular[static_cast<size_t>(pivot_col[static_cast<size_t>(k)])] =
            aug[static_cast<size_t>(k)][static_cast<size_t>(n)];

    if (r == n) {
        out.any_fixed_point = true;
        if (vec_is_zero(particular)) {
            out.kind = FixedPointSet::Kind::NoneNonzero;
        } else {
            out.kind = FixedPointSet::Kind::UniquePoint;
            out.point = particular;
        }
        return out;
    }

    out.kind = FixedPointSet::Kind::Subspace;
    out.any_fixed_point = true;
    out.point = particular;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        Vec dir = zero_vec(d, n);
        dir[static_cast<size_t>(c)] = FieldElement::one(d);
        for (int k = 0; k < r; ++k)
            dir[static_cast<size_t>(pivot_col[static_cast<size_t>(k)])] =
                -aug[static_cast<size_t>(k)][static_cast<size_t>(c)];
        out.directions.push_back(std::move(dir));
    }
    return out;
}

}  // namespace paradec
