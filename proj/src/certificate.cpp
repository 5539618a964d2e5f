#include "paradec/certificate.hpp"

namespace paradec {

std::string scheme_str(Scheme s) {
    switch (s) {
        case Scheme::FourPiece: return "four-piece";
        case Scheme::ZbcFive: return "zbc-five";
        case Scheme::SixPieceOddSphere: return "six-piece-odd-sphere";
    }
    return "?";
}

Scheme scheme_from_str(const std::string& s) {
    if (s == "four-piece") return Scheme::FourPiece;
    if (s == "zbc-five") return Scheme::ZbcFive;
    if (s == "six-piece-odd-sphere") return Scheme::SixPieceOddSphere;
    throw std::invalid_argument("unknown scheme '" + s + "'");
}

namespace {

bool is_pure_sigma_neg(const Word& w) {
    long n = 0;
    return w.is_a_power(&n) && n < 0;
}

}  // namespace

std::string assign_piece(const std::string& scheme, const Word& w) {
    char first = w.prefix_letter();
    if (scheme == "four-piece") {
        if (first == 'b') return "A1";
        if (first == 'B') return "A2";
        if (first == '1' || first == 'a' || is_pure_sigma_neg(w)) return "B1";
        return "B2";
    }
    if (scheme == "zbc") {
        if (first == '1' || first == 'a' || is_pure_sigma_neg(w)) return "A1Z";
        if (first == 'A') return "A2";
        if (first == 'b') return "B1";
        return "B2";
    }
    if (scheme == "zbc-c") {
        switch (first) {
            case '1': return "C";
            case 'a': return "A1Z";
            case 'A': return "A2";
            case 'b': return "B1";
            case 'B': return "B2";
        }
    }
    if (scheme == "six-locus") {
        if (first == '1' || first == 'a' || is_pure_sigma_neg(w)) return "P1";
        if (first == 'A') return "P2";
        if (first == 'b') return "P3";
        return "P4";
    }
    throw std::invalid_argument("unknown piece scheme '" + scheme + "'");
}

const AffineMap& Certificate::generator(const std::string& name) const {
    auto it = generators.find(name);
    if (it == generators.end())
        throw std::invalid_argument("certificate has no generator '" + name + "'");
    return it->second;
}

Json descriptor_to_json(const DescPtr& d) {
    Json j;
    switch (d->kind) {
        case FieldKind::RationalsPadic:
            j["kind"] = "padic";
            j["p"] = d->p;
            break;
        case FieldKind::RationalFunctions:
            j["kind"] = "ratfunc";
            j["p"] = d->p;
            j["place"] = d->place.str();
            j["base"] = d->mag_base;
            break;
        case FieldKind::Trivial:
            j["kind"] = "trivial";
            j["p"] = d->p;
            break;
    }
    return j;
}

DescPtr descriptor_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    long p = j.at("p").get<long>();
    if (kind == "padic") return make_padic_descriptor(p);
    if (kind == "ratfunc") {
        UniPoly place = UniPoly::parse(p, j.at("place").get<std::string>());
        long base = j.value("base", 2);
        return make_ratfunc_descriptor(p, place, base);
    }
    if (kind == "trivial") return make_trivial_descriptor(p);
    throw std::invalid_argument("unknown field kind '" + kind + "'");
}

Json affine_to_json(const AffineMap& f) {
    Json j;
    j["n"] = f.dim();
    j["matrix"] = f.linear.entry_strings();
    Json tr = Json::array();
    for (const auto& v : f.translation) tr.push_back(v.str());
    j["translation"] = tr;
    return j;
}

AffineMap affine_from_json(const DescPtr& d, const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<FieldElement> entries;
    for (const auto& s : j.at("matrix")) entries.push_back(FieldElement::parse(d, s.get<std::string>()));
    Mat L = Mat::from_entries(d, n, std::move(entries));
    Vec t;
    for (const auto& s : j.at("translation")) t.push_back(FieldElement::parse(d, s.get<std::string>()));
    return AffineMap::make(std::move(L), std::move(t));
}

namespace {

Json region_to_json(const Region& r) {
    Json j;
    j["kind"] = r.kind_str();
    Json c = Json::array();
    for (const auto& v : r.center) c.push_back(v.str());
    j["center"] = c;
    j["radius_exp"] = r.radius.exp();
    j["split"] = r.split;
    return j;
}

Region region_from_json(const DescPtr& d, const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    Vec center;
    for (const auto& s : j.at("center")) center.push_back(FieldElement::parse(d, s.get<std::string>()));
    Magnitude r = Magnitude::power(d->mag_base, j.at("radius_exp").get<long long>());
    int split = j.value("split", 0);
    int n = static_cast<int>(center.size());
    if (kind == "closed-ball") return Region::closed_ball(std::move(center), r);
    if (kind == "open-ball") return Region::open_ball(std::move(center), r);
    if (kind == "sphere") return Region::sphere(std::move(center), r);
    if (kind == "punctured-ball") return Region::punctured_ball(std::move(center), r);
    if (kind == "product-sphere-ball") return Region::product_sphere_ball(d, n, split, r);
    if (kind == "product-open-ball-sphere") return Region::product_open_ball_sphere(d, n, split, r);
    throw std::invalid_argument("unknown region kind '" + kind + "'");
}

std::string family_str(GroupSpec::Family f) {
    switch (f) {
        case GroupSpec::Family::GL_D: return "GL_D";
        case GroupSpec::Family::SL_D: return "SL_D";
        case GroupSpec::Family::SL_R_eps: return "SL_R_eps";
        case GroupSpec::Family::SA_D_eps: return "SA_D_eps";
        case GroupSpec::Family::SA_D_K: return "SA_D_K";
        case GroupSpec::Family::SA_L: return "SA_L";
    }
    return "?";
}

GroupSpec::Family family_from_str(const std::string& s) {
    if (s == "GL_D") return GroupSpec::Family::GL_D;
    if (s == "SL_D") return GroupSpec::Family::SL_D;
    if (s == "SL_R_eps") return GroupSpec::Family::SL_R_eps;
    if (s == "SA_D_eps") return GroupSpec::Family::SA_D_eps;
    if (s == "SA_D_K") return GroupSpec::Family::SA_D_K;
    if (s == "SA_L") return GroupSpec::Family::SA_L;
    throw std::invalid_argument("unknown group family '" + s + "'");
}

Json group_to_json(const GroupSpec& g, long mag_base) {
    Json j;
    j["family"] = family_str(g.family);
    j["n"] = g.n;
    j["ring"] = g.ring == GroupSpec::Ring::Integers ? "Z" : "D";
    if (g.family == GroupSpec::Family::SL_R_eps || g.family == GroupSpec::Family::SA_D_eps)
        j["eps_exp"] = g.eps.exp();
    (void)mag_base;
    return j;
}

GroupSpec group_from_json(const Json& j, long mag_base) {
    GroupSpec g;
    g.family = family_from_str(j.at("family").get<std::string>());
    g.n = j.at("n").get<int>();
    g.ring = j.value("ring", std::string("D")) == "Z" ? GroupSpec::Ring::Integers
                                                      : GroupSpec::Ring::D;
    if (j.contains("eps_exp")) g.eps = Magnitude::power(mag_base, j.at("eps_exp").get<long long>());
    return g;
}

}  // namespace

Json Certificate::to_json() const {
    Json j;
    j["schema"] = "paradec-certificate-v1";
    Json t;
    t["id"] = target.id;
    t["field"] = descriptor_to_json(target.field);
    t["n"] = target.n;
    if (target.region) t["region"] = region_to_json(*target.region);
    if (!target.radii_exps.empty()) t["radii_exps"] = target.radii_exps;
    j["target"] = t;
    j["scheme"] = scheme_str(scheme);
    j["group"] = group_to_json(group, target.field->mag_base);
    j["pieces"] = pieces;
    Json gens;
    for (const auto& [name, g] : generators) gens[name] = affine_to_json(g);
    j["generators"] = gens;
    Json eqs = Json::array();
    for (const auto& eq : equations) {
        Json terms = Json::array();
        for (const auto& [piece, elem] : eq) terms.push_back(Json::array({piece, elem}));
        eqs.push_back(terms);
    }
    j["equations"] = eqs;
    return j;
}

Certificate Certificate::from_json(const Json& j) {
    Certificate c;
    const Json& t = j.at("target");
    c.target.id = t.at("id").get<std::string>();
    c.target.field = descriptor_from_json(t.at("field"));
    c.target.n = t.at("n").get<int>();
    if (t.contains("region")) c.target.region = region_from_json(c.target.field, t.at("region"));
    if (t.contains("radii_exps"))
        c.target.radii_exps = t.at("radii_exps").get<std::vector<long long>>();
    c.scheme = scheme_from_str(j.at("scheme").get<std::string>());
    c.group = group_from_json(j.at("group"), c.target.field->mag_base);
    c.pieces = j.at("pieces").get<int>();
    for (const auto& [name, g] : j.at("generators").items())
        c.generators.emplace(name, affine_from_json(c.target.field, g));
    for (const auto& eq : j.at("equations")) {
        std::vector<std::pair<std::string, std::string>> terms;
        for (const auto& term : eq)
            terms.emplace_back(term.at(0).get<std::string>(), term.at(1).get<std::string>());
        c.equations.push_back(std::move(terms));
    }
    return c;
}

namespace {

struct PairChoice {
    Mat sigma, tau;  // 2x2 free pair, entry deviation < eps when required
};

bool magnus_path(const DescPtr& d) {
    // char K = 0 != char k: the p-adic case.  Equal characteristic (function
    // fields, trivial valuation in char p) takes the transcendental pair;
    // char-0 function and trivially valued fields also have char k = 0.
    return d->kind == FieldKind::RationalsPadic;
}

PairChoice free_pair(const DescPtr& d, const Magnitude& eps) {
    if (magnus_path(d)) {
        EpsPair p = magnus_eps_pair(d, eps);
        return {p.first, p.second};
    }
    TransPair p = transcendental_pair(d, eps);
    return {p.a, p.b};
}

// Free pair with no eps constraint, for the whole-space construction.
PairChoice free_pair_plain(const DescPtr& d) {
    if (d->characteristic() == 0) return {magnus(d, 0), magnus(d, 1)};
    if (!d->polynomial_elements())
        throw std::invalid_argument("positive characteristic requires a function field");
    TransPair p = transcendental_pair(d, Magnitude::one(d->mag_base));
    return {p.a, p.b};
}

GroupSpec::Ring coefficient_ring(const DescPtr& d) {
    return magnus_path(d) ? GroupSpec::Ring::Integers : GroupSpec::Ring::D;
}

Magnitude eps_zero(const Vec& x, const std::optional<Vec>& anchor, const Magnitude& r) {
    // the admissible bound of the anchored construction
    long base = x.empty() ? 2 : x[0].descriptor()->mag_base;
    if (!anchor) {
        Magnitude nx = norm(x);
        if (!(nx > r)) throw std::invalid_argument("need ||x|| > r for the linear scheme");
        return Magnitude::power(base, r.exp() - nx.exp());
    }
    Vec head_x(x.begin(), x.begin() + 2);
    Vec head_a(anchor->begin(), anchor->begin() + 2);
    Magnitude dist = norm(vec_sub(head_x, head_a));
    if (!(dist > r))
        throw std::invalid_argument("need r < ||(x1,x2) - anchor|| for the anchored scheme");
    Magnitude e0 = Magnitude::power(base, r.exp() - dist.exp());
    Magnitude na = norm(*anchor);
    if (!na.is_zero() && na > Magnitude::one(base))
        e0 = Magnitude::min(e0, Magnitude::power(base, -na.exp()));
    return e0;
}

std::vector<std::vector<std::pair<std::string, std::string>>> four_piece_equations() {
    return {{{"A1", "1"}, {"A2", "tau"}}, {{"B1", "1"}, {"B2", "sigma"}}};
}

std::vector<std::vector<std::pair<std::string, std::string>>> zbc_equations() {
    return {{{"A1Z", "1"}, {"A2", "sigma"}},
            {{"B1", "1"}, {"B2", "tau"}, {"C", "alpha"}}};
}

std::vector<std::vector<std::pair<std::string, std::string>>> six_piece_equations() {
    return {{{"E", "1"}, {"A12", "sigma1"}, {"A22", "sigma2"}},
            {{"Eprime", "1"}, {"A14", "tau1"}, {"A24", "tau2"}}};
}

}  // namespace

Certificate build_certificate(const BuildParams& params) {
    const DescPtr& d = params.field;
    if (!d) throw std::invalid_argument("missing field descriptor");
    int n = params.n;
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    const std::string& id = params.target_id;
    long base = d->mag_base;

    if (d->trivially_valued() && id != "whole-space")
        throw std::invalid_argument(
            "unsupported field for target '" + id + "': a trivially valued field has no "
            "nontrivial balls or spheres");

    Magnitude eps = Magnitude::power(base, params.eps_exp);
    if (params.eps_exp < 0) throw std::invalid_argument("eps must lie in (0, 1]");
    Magnitude r = Magnitude::power(base, params.radius_exp);

    Certificate cert;
    cert.target.field = d;
    cert.target.n = n;
    cert.target.id = id;

    auto uniform = [&](long long k) { return make_field(d).uniformizer_pow(k); };

    if (id == "whole-space") {
        if (n == 2) {
            PairChoice pair = free_pair_plain(d);
            GroupSpec::Ring ring = d->characteristic() == 0 ? GroupSpec::Ring::Integers
                                                            : GroupSpec::Ring::D;
            cert.scheme = Scheme::ZbcFive;
            cert.pieces = 5;
            cert.group = {GroupSpec::Family::SA_L, 2, ring, Magnitude::one(base)};
            Vec c = {FieldElement::one(d), FieldElement::zero(d)};
            Vec neg_c = {-c[0], -c[1]};
            cert.generators.emplace("sigma", AffineMap::from_linear(pair.sigma));
            cert.generators.emplace("tau", AffineMap::from_linear(pair.tau));
            cert.generators.emplace("alpha", AffineMap::translation_by(d, neg_c));
            cert.equations = zbc_equations();
            return cert;
        }
        BuildParams base_params = params;
        base_params.n = 2;
        return lift_certificate(build_certificate(base_params), n);
    }

    if (id == "sphere0" || id == "kn-minus-0") {
        PairChoice pair = free_pair(d, eps);
        GroupSpec::Ring ring = coefficient_ring(d);
        cert.group = {GroupSpec::Family::SL_R_eps, n, ring, eps};
        AffineMap s2 = AffineMap::from_linear(pair.sigma), t2 = AffineMap::from_linear(pair.tau);
        if (n % 2 == 0) {
            cert.scheme = Scheme::FourPiece;
            cert.pieces = 4;
            cert.generators.emplace("sigma", embed(s2, n, EmbedMode::Diagonal));
            cert.generators.emplace("tau", embed(t2, n, EmbedMode::Diagonal));
            cert.equations = four_piece_equations();
        } else {
            cert.scheme = Scheme::SixPieceOddSphere;
            cert.pieces = 6;
            cert.generators.emplace("sigma1", embed(s2, n, EmbedMode::Shifted1));
            cert.generators.emplace("tau1", embed(t2, n, EmbedMode::Shifted1));
            cert.generators.emplace("sigma2", embed(s2, n, EmbedMode::Shifted2));
            cert.generators.emplace("tau2", embed(t2, n, EmbedMode::Shifted2));
            cert.equations = six_piece_equations();
        }
        if (id == "sphere0") {
            cert.target.region = Region::sphere(zero_vec(d, n), r);
        } else {
            cert.target.radii_exps =
                params.radii_exps.empty() ? std::vector<long long>{-1, 0, 1} : params.radii_exps;
        }
        return cert;
    }

    if (id == "ball-no-0" || id == "sphere-far") {
        Vec x = params.center ? *params.center : [&] {
            Vec c = zero_vec(d, n);
            c[0] = uniform(params.radius_exp - 1);  // ||x|| = r * base > r
            return c;
        }();
        if (static_cast<int>(x.size()) != n) throw std::invalid_argument("center has wrong dimension");
        if (!(norm(x) > r))
            throw std::invalid_argument("target must avoid 0: need ||center|| > r");
        int big = -1;
        for (int k = 0; k < n && big < 0; ++k)
            if (x[static_cast<size_t>(k)].magnitude() > r) big = k;
        if (big < 0) throw std::logic_error("no coordinate exceeds the radius");

        std::vector<int> gamma(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) gamma[static_cast<size_t>(k)] = k;
        if (big > 0) std::swap(gamma[0], gamma[static_cast<size_t>(big)]);
        Vec z = x;
        if (big > 0) std::swap(z[0], z[static_cast<size_t>(big)]);

        Vec z_head(z.begin(), z.begin() + std::min<size_t>(2, z.size()));
        Magnitude e0 = [&] {
            Magnitude nh = norm(z_head);
            return Magnitude::power(base, r.exp() - nh.exp());
        }();
        Magnitude eps1 = Magnitude::min(eps, e0);

        PairChoice pair = free_pair(d, eps1);
        AffineMap s2 = AffineMap::from_linear(pair.sigma), t2 = AffineMap::from_linear(pair.tau);
        AffineMap sn = n > 2 ? embed(s2, n, EmbedMode::Corner) : s2;
        AffineMap tn = n > 2 ? embed(t2, n, EmbedMode::Corner) : t2;
        if (big > 0) {
            sn = embed(sn, n, EmbedMode::Permutation, gamma);
            tn = embed(tn, n, EmbedMode::Permutation, gamma);
        }
        cert.scheme = Scheme::FourPiece;
        cert.pieces = 4;
        cert.group = {GroupSpec::Family::SL_R_eps, n, coefficient_ring(d), eps};
        cert.generators.emplace("sigma", sn);
        cert.generators.emplace("tau", tn);
        cert.equations = four_piece_equations();
        cert.target.region = id == "ball-no-0" ? Region::closed_ball(x, r) : Region::sphere(x, r);
        return cert;
    }

    if (id == "ball0" || id == "sphere-with-0") {
        Vec x = params.center ? *params.center : [&] {
            if (id == "ball0") return zero_vec(d, n);
            Vec c = zero_vec(d, n);
            c[0] = uniform(params.radius_exp);  // ||x|| = r puts 0 on the sphere
            return c;
        }();
        if (static_cast<int>(x.size()) != n) throw std::invalid_argument("center has wrong dimension");
        bool contains_zero = id == "ball0" ? !(norm(x) > r) : norm(x) == r;
        if (!contains_zero)
            throw std::invalid_argument("target does not contain 0; use the linear scheme");

        // anchor away from the target: offset the first coordinate by a
        // uniformizer power of magnitude > r
        Vec anchor = x;
        long long off = params.radius_exp - 1;
        while (true) {
            anchor = x;
            anchor[0] = anchor[0] + uniform(off);
            Vec head(anchor.begin(), anchor.begin() + 2);
            if (!vec_is_zero(head)) break;
            --off;
        }
        Magnitude e0 = eps_zero(x, anchor, r);
        Magnitude eps1 = Magnitude::min(eps, e0);

        PairChoice pair = free_pair(d, eps1);
        Vec anchor_head(anchor.begin(), anchor.begin() + 2);
        std::vector<AffineMap> affs = affinize({pair.sigma, pair.tau}, anchor_head);
        AffineMap sn = n > 2 ? embed(affs[0], n, EmbedMode::Corner) : affs[0];
        AffineMap tn = n > 2 ? embed(affs[1], n, EmbedMode::Corner) : affs[1];

        cert.scheme = Scheme::FourPiece;
        cert.pieces = 4;
        cert.group = {GroupSpec::Family::SA_D_eps, n, GroupSpec::Ring::D, eps};
        cert.generators.emplace("sigma", sn);
        cert.generators.emplace("tau", tn);
        cert.equations = four_piece_equations();
        cert.target.region =
            id == "ball0" ? Region::closed_ball(x, r) : Region::sphere(x, r);
        return cert;
    }

    throw std::invalid_argument("unknown target '" + id + "'");
}

Certificate lift_certificate(const Certificate& cert, int m) {
    int n = cert.target.n;
    if (m < n) throw std::invalid_argument("lift target dimension must not shrink");
    if (m == n) return cert;
    if (cert.target.id != "whole-space")
        throw std::invalid_argument("only whole-space certificates lift through the projection");
    Certificate out = cert;
    out.target.n = m;
    out.group.n = m;
    out.generators.clear();
    for (const auto& [name, g] : cert.generators)
        out.generators.emplace(name, embed(g, m, EmbedMode::Corner));
    return out;
}

int combine_counts(int m, int n, int l, bool invariant) {
    if (m < 1 || n < 1 || l < 1) throw std::invalid_argument("piece counts must be positive");
    return m + n + l + (invariant ? 0 : 1);
}

}  // namespace paradec
