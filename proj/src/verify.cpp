#include "paradec/verify.hpp"

#include <algorithm>

namespace paradec {

CheckRecord CheckRecord::make(std::string name) {
    CheckRecord r;
    r.name = std::move(name);
    r.status = "pass";
    return r;
}

void CheckRecord::note_pass() {
    ++checked;
    ++passed;
}

void CheckRecord::note_fail(std::string witness) {
    ++checked;
    ++failed;
    witnesses.push_back(std::move(witness));
}

void CheckRecord::note_boundary() {
    ++checked;
    ++boundary;
}

void CheckRecord::finalize() {
    if (status == "error") return;
    if (failed > 0)
        status = "fail";
    else if (passed == 0 && boundary > 0)
        status = "boundary-unchecked";
    else
        status = "pass";
}

Json CheckRecord::to_json() const {
    Json j;
    j["name"] = name;
    j["status"] = status;
    Json counts;
    counts["checked"] = checked;
    counts["passed"] = passed;
    counts["failed"] = failed;
    counts["boundary_unchecked"] = boundary;
    j["counts"] = counts;
    j["witnesses"] = witnesses;
    return j;
}

CheckRecord CheckRecord::from_json(const Json& j) {
    CheckRecord r;
    r.name = j.at("name").get<std::string>();
    r.status = j.at("status").get<std::string>();
    const Json& counts = j.at("counts");
    r.checked = counts.at("checked").get<long long>();
    r.passed = counts.at("passed").get<long long>();
    r.failed = counts.at("failed").get<long long>();
    r.boundary = counts.at("boundary_unchecked").get<long long>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(w.get<std::string>());
    return r;
}

bool records_all_green(const std::vector<CheckRecord>& records) {
    for (const auto& r : records)
        if (r.status == "fail" || r.status == "error") return false;
    return true;
}

namespace {

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return vec_cmp(a, b) < 0; }
};

struct SampleInfo {
    int seed_idx = -1;
    Word word;
    std::string label;
    int locus = -1;
    bool is_z = false;
};

using SampleMap = std::map<Vec, SampleInfo, VecLess>;

Region locus_region(const DescPtr& d, int n, int which, const Magnitude& r) {
    return which == 0 ? Region::product_sphere_ball(d, n, n - 1, r)
                      : Region::product_open_ball_sphere(d, n, n - 1, r);
}

int locus_of_piece(const std::string& piece) {
    if (piece == "A12" || piece == "A14") return 0;
    if (piece == "A22" || piece == "A24") return 1;
    return -1;
}

struct Engine {
    const Certificate& cert;
    const VerifyOptions& opts;
    std::vector<CheckRecord> records;
    SampleMap sample;
    std::vector<Vec> seeds;
    bool fatal = false;

    const DescPtr& desc() const { return cert.target.field; }
    int n() const { return cert.target.n; }

    Vec head(const Vec& v) const { return Vec(v.begin(), v.begin() + 2); }

    Vec c_point() const {
        Vec c = zero_vec(desc(), n());
        c[0] = FieldElement::one(desc());
        return c;
    }

    std::string trim_witnesses(CheckRecord& rec) {
        if (rec.witnesses.size() > opts.max_witnesses) rec.witnesses.resize(opts.max_witnesses);
        return rec.status;
    }

    CheckRecord& push(CheckRecord rec) {
        rec.finalize();
        trim_witnesses(rec);
        records.push_back(std::move(rec));
        return records.back();
    }

    void error_record(const std::string& name, const std::string& what) {
        CheckRecord rec = CheckRecord::make(name);
        rec.status = "error";
        rec.witnesses.push_back(what);
        records.push_back(std::move(rec));
        fatal = true;
    }

    // --- structural checks -------------------------------------------------

    void check_structure() {
        CheckRecord rec = CheckRecord::make("structure");
        auto expect = [&](bool ok, const std::string& what) {
            if (ok)
                rec.note_pass();
            else {
                rec.status = "error";
                rec.witnesses.push_back(what);
                fatal = true;
            }
        };
        int expected_pieces = cert.scheme == Scheme::FourPiece
                                  ? 4
                                  : cert.scheme == Scheme::ZbcFive ? 5 : 6;
        expect(cert.pieces == expected_pieces,
               "declared piece count " + std::to_string(cert.pieces) + " does not match scheme " +
                   scheme_str(cert.scheme));
        const std::string& id = cert.target.id;
        bool odd_sphere = (id == "sphere0" || id == "kn-minus-0") && n() % 2 == 1;
        if (id == "whole-space")
            expect(cert.scheme == Scheme::ZbcFive, "whole-space target expects the 5-piece scheme");
        else if (odd_sphere)
            expect(cert.scheme == Scheme::SixPieceOddSphere,
                   "odd-dimensional sphere at 0 expects the 6-piece scheme");
        else
            expect(cert.scheme == Scheme::FourPiece,
                   "target '" + id + "' expects the 4-piece scheme");
        for (const auto& eq : cert.equations)
            for (const auto& [piece, elem] : eq)
                expect(elem == "1" || cert.generators.count(elem) > 0,
                       "equation references unknown element '" + elem + "'");
        for (const auto& [name, g] : cert.generators)
            expect(g.dim() == n(), "generator '" + name + "' has wrong dimension");
        push(std::move(rec));
    }

    void check_group_membership() {
        CheckRecord rec = CheckRecord::make("group-membership");
        for (const auto& [name, g] : cert.generators) {
            MembershipReport m = group_membership(g, cert.group);
            if (m.ok)
                rec.note_pass();
            else {
                std::string why = name + " not in " + cert.group.str();
                if (!m.diagnostics.empty()) why += ": " + m.diagnostics.front();
                rec.note_fail(std::move(why));
            }
        }
        push(std::move(rec));
    }

    // --- seeds and orbit construction --------------------------------------

    bool seed_in_target(const Vec& s) const {
        const std::string& id = cert.target.id;
        if (id == "whole-space") return !vec_is_zero(head(s));
        if (id == "kn-minus-0") return !vec_is_zero(s);
        return cert.target.region && cert.target.region->contains(s);
    }

    void validate_seeds() {
        CheckRecord rec = CheckRecord::make("seeds-in-target");
        for (const auto& s : seeds) {
            if (seed_in_target(s))
                rec.note_pass();
            else {
                rec.status = "error";
                rec.witnesses.push_back("seed " + vec_str(s) + " outside the target");
                fatal = true;
            }
        }
        push(std::move(rec));
    }

    int seed_locus(const Vec& s) const {
        Magnitude r = cert.target.id == "sphere0" ? cert.target.region->radius : norm(s);
        bool in0 = locus_region(desc(), n(), 0, r).contains(s);
        bool in1 = locus_region(desc(), n(), 1, r).contains(s);
        if (in0 == in1) return -2;  // impossible on the sphere; flags an error
        return in0 ? 0 : 1;
    }

    std::string label_for(const Word& w, int seed_idx, int locus) const {
        switch (cert.scheme) {
            case Scheme::FourPiece:
                return assign_piece("four-piece", w);
            case Scheme::ZbcFive: {
                bool c_orbit = vec_eq(head(seeds[static_cast<size_t>(seed_idx)]), head(c_point()));
                return assign_piece(c_orbit ? "zbc-c" : "zbc", w);
            }
            case Scheme::SixPieceOddSphere: {
                std::string sub = assign_piece("six-locus", w);
                if (sub == "P1") return "E";
                if (sub == "P3") return "Eprime";
                if (sub == "P2") return locus == 0 ? "A12" : "A22";
                return locus == 0 ? "A14" : "A24";
            }
        }
        throw std::logic_error("unreachable");
    }

    void build_orbits() {
        CheckRecord dup = CheckRecord::make("freeness-injectivity");
        for (size_t si = 0; si < seeds.size(); ++si) {
            const Vec& s = seeds[si];
            int locus = -1;
            AffineMap sg = AffineMap::identity(desc(), n());
            AffineMap tg = sg;
            if (cert.scheme == Scheme::SixPieceOddSphere) {
                locus = seed_locus(s);
                if (locus < 0) {
                    error_record("seed-locus", "seed " + vec_str(s) + " lies in no unique locus");
                    return;
                }
                sg = cert.generator(locus == 0 ? "sigma1" : "sigma2");
                tg = cert.generator(locus == 0 ? "tau1" : "tau2");
            } else {
                sg = cert.generator("sigma");
                tg = cert.generator("tau");
            }
            AffineMap table[4] = {sg, sg.inverse(), tg, tg.inverse()};

            // Words are extended by prepending letters, so each step applies
            // one generator to the previous point.
            struct Frame {
                Word w;
                Vec p;
            };
            std::vector<Frame> stack{{Word(), s}};
            while (!stack.empty()) {
                Frame f = std::move(stack.back());
                stack.pop_back();
                auto [it, inserted] =
                    sample.emplace(f.p, SampleInfo{static_cast<int>(si), f.w,
                                                   label_for(f.w, static_cast<int>(si), locus),
                                                   locus, false});
                if (!inserted) {
                    dup.note_fail("duplicate point " + vec_str(f.p) + ": word " +
                                  it->second.word.str() + " of seed " +
                                  std::to_string(it->second.seed_idx) + " vs word " + f.w.str() +
                                  " of seed " + std::to_string(si));
                    continue;
                }
                dup.note_pass();
                if (f.w.length() < static_cast<size_t>(opts.depth)) {
                    for (Letter l = 0; l < 4; ++l) {
                        if (!f.w.empty() && letter_inverse(l) == f.w.at(0)) continue;
                        Word ext = Word::generator(l / 2, l % 2 == 1) * f.w;
                        stack.push_back({std::move(ext), table[l].apply(f.p)});
                    }
                }
            }
        }
        if (cert.scheme == Scheme::ZbcFive) {
            const AffineMap& alpha = cert.generator("alpha");
            Vec c_head = head(c_point());
            for (size_t si = 0; si < seeds.size(); ++si) {
                if (!vec_eq(head(seeds[si]), c_head)) continue;
                Vec z = alpha.apply(seeds[si]);
                auto [it, inserted] =
                    sample.emplace(z, SampleInfo{static_cast<int>(si), Word(), "A1Z", -1, true});
                if (!inserted)
                    dup.note_fail("alpha image " + vec_str(z) + " collides with word " +
                                  it->second.word.str());
                else
                    dup.note_pass();
            }
        }
        push(std::move(dup));
    }

    // --- invariance records -------------------------------------------------

    void check_region_invariance() {
        if (cert.target.id == "whole-space") return;
        CheckRecord rec = CheckRecord::make("region-invariance");
        for (const auto& [p, info] : sample) {
            bool ok;
            if (cert.target.id == "kn-minus-0")
                ok = norm(p) == norm(seeds[static_cast<size_t>(info.seed_idx)]);
            else
                ok = cert.target.region->contains(p);
            if (ok)
                rec.note_pass();
            else
                rec.note_fail("orbit point " + vec_str(p) + " of word " + info.word.str() +
                              " escapes the target");
        }
        push(std::move(rec));
    }

    void check_locus_invariance() {
        if (cert.scheme != Scheme::SixPieceOddSphere) return;
        CheckRecord rec = CheckRecord::make("locus-invariance");
        std::vector<const AffineMap*> maps;
        std::vector<AffineMap> inverses;
        for (const char* name : {"sigma1", "tau1", "sigma2", "tau2"}) {
            maps.push_back(&cert.generator(name));
            inverses.push_back(cert.generator(name).inverse());
        }
        for (const auto& [p, info] : sample) {
            Magnitude r = cert.target.id == "sphere0" ? cert.target.region->radius : norm(p);
            Region reg = locus_region(desc(), n(), info.locus, r);
            auto probe = [&](const AffineMap& g) {
                if (reg.contains(g.apply(p)))
                    rec.note_pass();
                else
                    rec.note_fail("image of " + vec_str(p) + " leaves locus " +
                                  std::to_string(info.locus));
            };
            for (const AffineMap* g : maps) probe(*g);
            for (const AffineMap& g : inverses) probe(g);
        }
        push(std::move(rec));
    }

    void check_displacement() {
        if (!cert.target.region && cert.target.id != "kn-minus-0") return;
        CheckRecord rec = CheckRecord::make("displacement");
        std::vector<AffineMap> gens;
        for (const auto& [name, g] : cert.generators)
            if (name != "alpha") gens.push_back(g);
        Vec center = cert.target.region ? cert.target.region->center : zero_vec(desc(), n());
        Magnitude radius = cert.target.region
                               ? cert.target.region->radius
                               : norm(seeds.empty() ? c_point() : seeds.front());
        DisplacementReport d = displacement_audit(gens, center, radius, seeds);
        for (const auto& g : d.generators) {
            if (g.strict)
                rec.note_pass();
            else
                rec.note_fail("generator moves the center by " + g.displacement.str() +
                              ", not < " + radius.str());
        }
        rec.checked += d.samples_checked;
        rec.passed += d.samples_checked - d.samples_failed;
        if (d.samples_failed > 0) {
            rec.failed += d.samples_failed;
            rec.witnesses.push_back("sampled region points escape under a generator");
        }
        push(std::move(rec));
    }

    // --- freeness cross-checks ----------------------------------------------

    void check_fixed_points() {
        CheckRecord rec = CheckRecord::make("fixed-point-crosscheck");
        int maxlen = std::min(3, opts.depth);
        bool six = cert.scheme == Scheme::SixPieceOddSphere;
        std::vector<std::pair<std::string, std::string>> pairs;
        if (six)
            pairs = {{"sigma1", "tau1"}, {"sigma2", "tau2"}};
        else
            pairs = {{"sigma", "tau"}};
        FieldElement two = FieldElement::integer(desc(), 2);
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            const AffineMap& sg = cert.generator(pairs[pi].first);
            const AffineMap& tg = cert.generator(pairs[pi].second);
            // the embedded pair only acts on the seeds of its own locus
            std::vector<Vec> acted;
            for (const auto& s : seeds)
                if (!six || seed_locus(s) == static_cast<int>(pi)) acted.push_back(s);
            for (const Word& w : enumerate_reduced(maxlen)) {
                if (w.empty()) continue;
                AffineMap m = rho_affine(w, sg, tg);
                FixedPointSet fps = fixed_points(m);
                bool ok = true;
                std::string why;
                // no seed may be fixed
                for (const auto& s : acted)
                    if (vec_eq(m.apply(s), s)) {
                        ok = false;
                        why = "word " + w.str() + " fixes seed " + vec_str(s);
                    }
                // a unique fixed point must avoid the target
                if (ok && fps.kind == FixedPointSet::Kind::UniquePoint && cert.target.region &&
                    cert.target.region->contains(*fps.point)) {
                    ok = false;
                    why = "word " + w.str() + " fixes " + vec_str(*fps.point) +
                          " inside the target";
                }
                // Lemma-trace consistency in dimension 2 for linear parts
                if (ok && n() == 2 && m.is_linear() &&
                    m.linear.det() == FieldElement::one(desc())) {
                    bool trace_two = m.linear.trace() == two;
                    bool has_nonzero_fixed = fps.kind == FixedPointSet::Kind::Subspace ||
                                             fps.kind == FixedPointSet::Kind::UniquePoint;
                    if (trace_two != has_nonzero_fixed) {
                        ok = false;
                        why = "trace-2 criterion disagrees with the solver on word " + w.str();
                    }
                }
                if (ok)
                    rec.note_pass();
                else
                    rec.note_fail(std::move(why));
            }
        }
        push(std::move(rec));
    }

    void check_c_condition() {
        if (cert.scheme != Scheme::ZbcFive) return;
        CheckRecord rec = CheckRecord::make("c-condition");
        Vec c_head = head(c_point());
        for (const auto& [p, info] : sample) {
            bool in_c_fiber = vec_eq(head(p), c_head);
            bool labeled_c = info.label == "C";
            if (in_c_fiber != labeled_c)
                rec.note_fail("point " + vec_str(p) + " (word " + info.word.str() +
                              ") violates F x  cap C = {x}");
            else
                rec.note_pass();
            if (info.is_z && !vec_is_zero(head(p)))
                rec.note_fail("alpha(C) sample " + vec_str(p) + " off the zero fiber");
        }
        push(std::move(rec));
    }

    // --- the identity equations ----------------------------------------------

    enum class Tri { True, False, Unknown };

    Tri decide_term(const Vec& p, const SampleInfo& info, const std::string& piece,
                    const std::string& elem,
                    const std::map<std::string, AffineMap>& inverses) const {
        if (elem == "1") return info.label == piece ? Tri::True : Tri::False;
        if (elem == "alpha") {
            // membership in alpha(C) = preimage of 0 under the projection
            const AffineMap& ainv = inverses.at("alpha");
            Vec q = ainv.apply(p);
            Vec c_head = head(c_point());
            return vec_eq(head(q), c_head) ? Tri::True : Tri::False;
        }
        const AffineMap& ginv = inverses.at(elem);
        Vec q = ginv.apply(p);
        auto it = sample.find(q);
        if (it != sample.end()) return it->second.label == piece ? Tri::True : Tri::False;
        if (cert.scheme == Scheme::SixPieceOddSphere) {
            int piece_locus = locus_of_piece(piece);
            if (piece_locus >= 0) {
                Magnitude r =
                    cert.target.id == "sphere0" ? cert.target.region->radius : norm(q);
                if (!locus_region(desc(), n(), piece_locus, r).contains(q)) return Tri::False;
            }
        }
        return Tri::Unknown;
    }

    void check_equations() {
        std::map<std::string, AffineMap> inverses;
        for (const auto& [name, g] : cert.generators) inverses.emplace(name, g.inverse());
        for (size_t e = 0; e < cert.equations.size(); ++e) {
            CheckRecord rec = CheckRecord::make("equation:" + std::to_string(e + 1));
            for (const auto& [p, info] : sample) {
                int true_cnt = 0, unknown_cnt = 0;
                for (const auto& [piece, elem] : cert.equations[e]) {
                    Tri t = decide_term(p, info, piece, elem, inverses);
                    if (t == Tri::True) ++true_cnt;
                    if (t == Tri::Unknown) ++unknown_cnt;
                }
                if (true_cnt >= 2)
                    rec.note_fail("point " + vec_str(p) + " (word " + info.word.str() +
                                  ") lies in " + std::to_string(true_cnt) + " terms");
                else if (unknown_cnt > 0)
                    rec.note_boundary();
                else if (true_cnt == 1)
                    rec.note_pass();
                else
                    rec.note_fail("point " + vec_str(p) + " (word " + info.word.str() +
                                  ") lies in no term");
            }
            push(std::move(rec));
        }
    }

    void check_partition() {
        CheckRecord rec = CheckRecord::make("partition");
        std::vector<std::string> allowed;
        switch (cert.scheme) {
            case Scheme::FourPiece: allowed = {"A1", "A2", "B1", "B2"}; break;
            case Scheme::ZbcFive: allowed = {"A1Z", "A2", "B1", "B2", "C"}; break;
            case Scheme::SixPieceOddSphere:
                allowed = {"E", "A12", "A22", "Eprime", "A14", "A24"};
                break;
        }
        if (static_cast<int>(allowed.size()) != cert.pieces)
            rec.note_fail("piece table size differs from the declared count");
        for (const auto& [p, info] : sample) {
            if (std::find(allowed.begin(), allowed.end(), info.label) != allowed.end())
                rec.note_pass();
            else
                rec.note_fail("point " + vec_str(p) + " carries unknown label " + info.label);
        }
        push(std::move(rec));
    }

    std::vector<CheckRecord> run() {
        check_structure();
        if (fatal) return records;
        check_group_membership();
        seeds = opts.seeds.empty() ? default_seeds(cert, opts.depth) : opts.seeds;
        validate_seeds();
        if (fatal) return records;
        build_orbits();
        if (fatal) return records;
        check_region_invariance();
        check_locus_invariance();
        check_displacement();
        check_fixed_points();
        check_c_condition();
        check_equations();
        check_partition();
        return records;
    }
};

}  // namespace

namespace {

// The depth-bounded orbit of a seed under the scheme generators that act on
// it; used to keep default seeds in pairwise distinct orbits.
std::set<Vec, VecLess> bounded_orbit(const Certificate& cert, const Vec& seed, int depth) {
    const AffineMap* sg;
    const AffineMap* tg;
    if (cert.scheme == Scheme::SixPieceOddSphere) {
        Magnitude r = cert.target.id == "sphere0" ? cert.target.region->radius : norm(seed);
        bool first = locus_region(cert.target.field, cert.target.n, 0, r).contains(seed);
        sg = &cert.generator(first ? "sigma1" : "sigma2");
        tg = &cert.generator(first ? "tau1" : "tau2");
    } else {
        sg = &cert.generator("sigma");
        tg = &cert.generator("tau");
    }
    AffineMap table[4] = {*sg, sg->inverse(), *tg, tg->inverse()};
    std::set<Vec, VecLess> out;
    struct Frame {
        Word w;
        Vec p;
    };
    std::vector<Frame> stack{{Word(), seed}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        out.insert(f.p);
        if (f.w.length() < static_cast<size_t>(depth)) {
            for (Letter l = 0; l < 4; ++l) {
                if (!f.w.empty() && letter_inverse(l) == f.w.at(0)) continue;
                stack.push_back({Word::generator(l / 2, l % 2 == 1) * f.w, table[l].apply(f.p)});
            }
        }
    }
    return out;
}

// Greedy deterministic selection: keep a candidate only if its bounded orbit
// avoids every orbit already kept.
std::vector<Vec> pick_disjoint(const Certificate& cert, const std::vector<Vec>& mandatory,
                               const std::vector<Vec>& candidates, size_t want, int depth) {
    std::vector<Vec> chosen = mandatory;
    std::set<Vec, VecLess> taken;
    for (const Vec& s : mandatory) {
        auto orb = bounded_orbit(cert, s, depth);
        taken.insert(orb.begin(), orb.end());
    }
    for (const Vec& s : candidates) {
        if (chosen.size() >= want) break;
        auto orb = bounded_orbit(cert, s, depth);
        bool clash = false;
        for (const Vec& p : orb)
            if (taken.count(p)) {
                clash = true;
                break;
            }
        if (clash) continue;
        chosen.push_back(s);
        taken.insert(orb.begin(), orb.end());
    }
    return chosen;
}

}  // namespace

std::vector<Vec> default_seeds(const Certificate& cert, int depth) {
    const DescPtr& d = cert.target.field;
    int n = cert.target.n;
    const std::string& id = cert.target.id;
    ValuationRing ring = make_field(d);
    auto pi = [&](long long k) {
        if (!d->trivially_valued()) return ring.uniformizer_pow(k);
        if (d->polynomial_elements())
            return FieldElement::rat_func(d, UniPoly::variable(d->p), UniPoly::constant(d->p, 1))
                .pow(k);
        return FieldElement::integer(d, 1);
    };

    if (id == "whole-space") {
        std::vector<Vec> mandatory;
        Vec c = zero_vec(d, n);
        c[0] = FieldElement::one(d);
        mandatory.push_back(c);
        if (n > 2) {
            Vec c2 = c;
            c2[static_cast<size_t>(n - 1)] = FieldElement::one(d);
            mandatory.push_back(c2);
        }
        std::vector<Vec> candidates;
        for (long a = 1; a <= 4; ++a) {
            Vec s = zero_vec(d, n);
            s[0] = pi(1) * FieldElement::integer(d, 2 * a + 1);
            s[1] = FieldElement::integer(d, 1) + pi(a + 1);
            candidates.push_back(s);
            Vec t = zero_vec(d, n);
            t[0] = FieldElement::integer(d, 1) + pi(a);
            t[1] = pi(a + 2);
            candidates.push_back(t);
        }
        return pick_disjoint(cert, mandatory, candidates, mandatory.size() + 2, depth);
    }

    if (id == "sphere0" || id == "kn-minus-0") {
        std::vector<long long> exps =
            id == "sphere0" ? std::vector<long long>{cert.target.region->radius.exp()}
                            : cert.target.radii_exps;
        std::vector<Vec> all;
        for (long long e : exps) {
            std::vector<Vec> mandatory, candidates;
            Vec s1 = zero_vec(d, n);
            s1[0] = pi(e);
            mandatory.push_back(s1);
            size_t want;
            if (n % 2 == 1) {
                Vec s3 = zero_vec(d, n);  // on the B(open) x S locus
                s3[static_cast<size_t>(n - 1)] = pi(e);
                mandatory.push_back(s3);
                for (long long k = 1; k <= 4; ++k) {
                    Vec s2 = zero_vec(d, n);  // S x B locus, nonzero tail
                    s2[0] = pi(e);
                    s2[static_cast<size_t>(n - 1)] = pi(e + k);
                    candidates.push_back(s2);
                    Vec s4 = s3;
                    s4[0] = pi(e + k);
                    candidates.push_back(s4);
                }
                want = mandatory.size() + 2;
            } else {
                for (long long k = 1; k <= 4; ++k) {
                    Vec s2 = zero_vec(d, n);
                    s2[std::min<size_t>(1, static_cast<size_t>(n - 1))] = pi(e);
                    s2[0] = pi(e + k);
                    candidates.push_back(s2);
                }
                want = 2;
            }
            std::vector<Vec> part = pick_disjoint(cert, mandatory, candidates, want, depth);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }

    // anchored or far targets: the region center (when inside) plus
    // perturbations staying in the region
    const Region& reg = *cert.target.region;
    long long re = reg.radius.exp();
    size_t second = static_cast<size_t>(std::min(1, n - 1));
    std::vector<Vec> mandatory, candidates;
    if (reg.kind == Region::Kind::ClosedBall) {
        mandatory.push_back(reg.center);
        for (long long k = 0; k <= 3; ++k) {
            Vec s2 = reg.center;
            s2[0] = s2[0] + pi(re + k);
            candidates.push_back(s2);
            Vec s3 = reg.center;
            s3[second] = s3[second] + pi(re + k);
            candidates.push_back(s3);
        }
    } else {
        for (long long k = 0; k <= 3; ++k) {
            Vec s1 = reg.center;
            s1[0] = s1[0] + pi(re);
            s1[second] = s1[second] + pi(re + 1 + k);
            candidates.push_back(s1);
            Vec s2 = reg.center;
            s2[second] = s2[second] + pi(re);
            s2[0] = s2[0] + pi(re + 1 + k);
            candidates.push_back(s2);
        }
        Vec s0 = reg.center;
        s0[0] = s0[0] + pi(re);
        mandatory.push_back(s0);
    }
    return pick_disjoint(cert, mandatory, candidates, 3, depth);
}

std::vector<CheckRecord> verify_certificate(const Certificate& cert, const VerifyOptions& opts) {
    Engine engine{cert, opts};
    return engine.run();
}

std::vector<CheckRecord> verify_four_piece(const AffineMap& sigma, const AffineMap& tau,
                                           const std::vector<Vec>& seeds, int depth,
                                           const Region& region) {
    Certificate cert;
    cert.target.id = region.kind == Region::Kind::Sphere ? "sphere-far" : "ball-no-0";
    cert.target.field = sigma.descriptor();
    cert.target.n = sigma.dim();
    cert.target.region = region;
    cert.scheme = Scheme::FourPiece;
    cert.pieces = 4;
    // verify against the full isometry group; the scheme checks are the point here
    cert.group = {sigma.is_linear() && tau.is_linear() ? GroupSpec::Family::SL_D
                                                       : GroupSpec::Family::SA_D_K,
                  sigma.dim(), GroupSpec::Ring::D, Magnitude::one(sigma.descriptor()->mag_base)};
    cert.generators.emplace("sigma", sigma);
    cert.generators.emplace("tau", tau);
    cert.equations = {{{"A1", "1"}, {"A2", "tau"}}, {{"B1", "1"}, {"B2", "sigma"}}};
    VerifyOptions o;
    o.depth = depth;
    o.seeds = seeds;
    return verify_certificate(cert, o);
}

}  // namespace paradec
