#include "paradec/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

namespace paradec {

DescPtr field_from_shorthand(const std::string& name) {
    if (name == "f2s-q") return make_ratfunc_descriptor(2, UniPoly::parse(2, "s^2+s+1"));
    if (name == "qx") return make_ratfunc_descriptor(0, UniPoly::parse(0, "s"));
    if (name == "qx-q") return make_ratfunc_descriptor(0, UniPoly::parse(0, "2s+1"));
    if (name == "t0") return make_trivial_descriptor(0);
    if (name.size() >= 2 && name.front() == 't')
        return make_trivial_descriptor(std::stol(name.substr(1)));
    if (name.size() >= 2 && name.front() == 'q')
        return make_padic_descriptor(std::stol(name.substr(1)));
    if (name.size() >= 3 && name.front() == 'f' && name.back() == 's')
        return make_ratfunc_descriptor(std::stol(name.substr(1, name.size() - 2)),
                                       UniPoly::parse(std::stol(name.substr(1, name.size() - 2)),
                                                      "s"));
    throw std::invalid_argument("unknown field shorthand '" + name + "'");
}

std::string shorthand_or_json(const DescPtr& d) { return d->str(); }

int worker_count() {
    const char* envv = std::getenv("PARADEC_WORKERS");
    if (!envv) return 1;
    int v = std::atoi(envv);
    return v >= 1 ? v : 1;
}

namespace {

// Runs fn(i) for each index and collects the results in index order; the
// worker count never changes the output.
template <class T, class Fn>
std::vector<T> parallel_map(size_t count, Fn fn) {
    std::vector<T> out(count);
    int workers = std::min<size_t>(worker_count(), count == 0 ? 1 : count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) break;
                out[i] = fn(i);
            }
        });
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

std::vector<Vec> parse_seed_list(const DescPtr& d, int n, const std::string& text) {
    std::vector<Vec> seeds;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t open = text.find('(', pos);
        if (open == std::string::npos) break;
        size_t close = text.find(')', open);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced seed list");
        std::string inner = text.substr(open + 1, close - open - 1);
        Vec v;
        size_t start = 0;
        int depth = 0;
        for (size_t k = 0; k <= inner.size(); ++k) {
            if (k < inner.size() && inner[k] == '(') ++depth;
            if (k < inner.size() && inner[k] == ')') --depth;
            if (k == inner.size() || (inner[k] == ',' && depth == 0)) {
                v.push_back(FieldElement::parse(d, inner.substr(start, k - start)));
                start = k + 1;
            }
        }
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("seed has wrong dimension: (" + inner + ")");
        seeds.push_back(std::move(v));
        pos = close + 1;
    }
    if (seeds.empty()) throw std::invalid_argument("empty seed list");
    return seeds;
}

std::vector<MatrixPair> trace_test_pairs(bool magnus_only) {
    DescPtr q2 = field_from_shorthand("q2");
    std::vector<MatrixPair> pairs;
    pairs.push_back({"magnus-a0-a1", magnus(q2, 0), magnus(q2, 1)});
    if (magnus_only) return pairs;
    pairs.push_back({"magnus-a1-a2", magnus(q2, 1), magnus(q2, 2)});
    pairs.push_back({"unipotent",
                     Mat::from_ints(q2, 2, {1, 1, 0, 1}),
                     Mat::from_ints(q2, 2, {1, 0, 1, 1})});
    {
        std::vector<FieldElement> ea = {
            FieldElement::rational(q2, Rat(1, 2)), FieldElement::integer(q2, 1),
            FieldElement::integer(q2, -1), FieldElement::integer(q2, 0)};
        std::vector<FieldElement> eb = {
            FieldElement::integer(q2, 2), FieldElement::rational(q2, Rat(3, 5)),
            FieldElement::integer(q2, 5), FieldElement::integer(q2, 2)};
        pairs.push_back({"rational-entries", Mat::from_entries(q2, 2, ea),
                         Mat::from_entries(q2, 2, eb)});
    }
    {
        DescPtr f2s = field_from_shorthand("f2s");
        TransPair tp = transcendental_pair(f2s, Magnitude::one(2));
        pairs.push_back({"function-field", tp.a, tp.b});
    }
    return pairs;
}

Report run_verify_traces(int maxlen, const std::string& pairs_id) {
    Report rep;
    rep.config["command"] = "verify-traces";
    rep.config["maxlen"] = maxlen;
    rep.config["pairs"] = pairs_id;

    // the special-class table, byte-exact
    {
        CheckRecord rec = CheckRecord::make("special-class-table");
        const std::vector<std::pair<std::string, std::string>> expected = {
            {"1", "2"},
            {"a", "X"}, {"A", "X"},
            {"b", "Y"}, {"B", "Y"},
            {"ab", "Z"}, {"AB", "Z"},
            {"Ab", "X*Y - Z"}, {"aB", "X*Y - Z"},
            {"abAB", "-X*Y*Z + X^2 + Y^2 + Z^2 - 2"},
            {"aBAb", "-X*Y*Z + X^2 + Y^2 + Z^2 - 2"},
            {"abAb", "X*Y*Z - X^2 - Z^2 + 2"},
            {"aBAB", "X*Y*Z - X^2 - Z^2 + 2"},
        };
        for (const auto& [word, poly] : expected) {
            std::string got = phi(Word::parse(word), 0).str();
            if (got == poly)
                rec.note_pass();
            else
                rec.note_fail("Phi([" + word + "]) = " + got + ", expected " + poly);
        }
        rep.add(std::move(rec));
    }

    std::vector<MatrixPair> pairs = trace_test_pairs(pairs_id == "magnus");
    std::vector<CheckRecord> results = parallel_map<CheckRecord>(pairs.size(), [&](size_t pi) {
        const MatrixPair& pr = pairs[pi];
        CheckRecord rec = CheckRecord::make("fricke:" + pr.name);
        const DescPtr& d = pr.a.descriptor();
        long characteristic = d->characteristic();
        FieldElement ta = pr.a.trace(), tb = pr.b.trace(), tab = (pr.a * pr.b).trace();
        Mat ai = pr.a.inverse(), bi = pr.b.inverse();
        const Mat* table[4] = {&pr.a, &ai, &pr.b, &bi};
        std::vector<Mat> stack{Mat::identity(d, 2)};
        std::map<std::string, FieldElement> rhs_cache;
        walk_reduced(
            maxlen, [&](Letter l) { stack.push_back(stack.back() * (*table[l])); },
            [&] { stack.pop_back(); },
            [&](const Word& w) {
                FieldElement lhs = stack.back().trace();
                ConjClass cls = canonical_class(w);
                auto it = rhs_cache.find(cls.rep.str());
                if (it == rhs_cache.end())
                    it = rhs_cache
                             .emplace(cls.rep.str(),
                                      phi(cls, characteristic).eval(ta, tb, tab))
                             .first;
                if (lhs == it->second)
                    rec.note_pass();
                else
                    rec.note_fail("word " + w.str() + ": tr = " + lhs.str() + ", Phi gives " +
                                  it->second.str());
            });
        rec.finalize();
        return rec;
    });
    rep.add_all(std::move(results));
    return rep;
}

Report run_verify_psi(int maxlen, const std::string& setting) {
    Report rep;
    rep.config["command"] = "verify-psi";
    rep.config["maxlen"] = maxlen;
    rep.config["setting"] = setting;

    std::vector<long> chars;
    if (setting == "char0")
        chars = {0};
    else if (setting == "char2")
        chars = {2};
    else if (setting == "both")
        chars = {0, 2};
    else
        throw std::invalid_argument("setting must be char0, char2 or both");

    for (long c : chars) {
        PsiSetting s = eq_fgh_setting(c);
        std::string tag = ":char" + std::to_string(c);
        {
            CheckRecord rec = CheckRecord::make("fgh-values" + tag);
            auto expect_mag = [&](const FieldElement& v, long long exp, const std::string& what) {
                Magnitude got = v.magnitude();
                Magnitude want = Magnitude::power(2, exp);
                if (got == want)
                    rec.note_pass();
                else
                    rec.note_fail(what + " has magnitude " + got.str() + ", expected " +
                                  want.str());
            };
            expect_mag(s.f, -1, "f");           // |f| = 2
            expect_mag(s.g, -1, "g");           // |g| = 2
            expect_mag(s.h, -2, "h");           // |h| = 4
            expect_mag(s.f * s.g - s.h, -2, "fg - h");
            rep.add(std::move(rec));
        }

        // distinct conjugacy classes of length <= maxlen
        std::vector<ConjClass> classes;
        {
            std::set<std::string> seen;
            for (const Word& w : enumerate_reduced(maxlen)) {
                ConjClass cls = canonical_class(w);
                if (cls.l() == 0) continue;
                if (seen.insert(cls.rep.str()).second) classes.push_back(std::move(cls));
            }
        }
        struct ClassOutcome {
            bool law_ok = true, not_two_ok = true;
            std::string witness;
        };
        std::vector<ClassOutcome> outs =
            parallel_map<ClassOutcome>(classes.size(), [&](size_t i) {
                ClassOutcome o;
                PsiReport r = psi_magnitude(classes[i], s.f, s.g, s.h);
                if (!r.equal) {
                    o.law_ok = false;
                    o.witness = "class " + classes[i].rep.str() + ": |Psi| = " + r.actual.str() +
                                ", predicted " + r.predicted.str();
                }
                FieldElement two = FieldElement::integer(s.field, 2);
                if (r.value == two) {
                    o.not_two_ok = false;
                    o.witness = "class " + classes[i].rep.str() + ": Psi = 2";
                }
                return o;
            });
        CheckRecord law = CheckRecord::make("psi-magnitude-law" + tag);
        CheckRecord nottwo = CheckRecord::make("psi-not-two" + tag);
        for (const auto& o : outs) {
            if (o.law_ok)
                law.note_pass();
            else
                law.note_fail(o.witness);
            if (o.not_two_ok)
                nottwo.note_pass();
            else
                nottwo.note_fail(o.witness);
        }
        rep.add(std::move(law));
        rep.add(std::move(nottwo));
    }
    return rep;
}

Report run_freeness_audit(int maxlen, const std::string& pair) {
    Report rep;
    rep.config["command"] = "freeness-audit";
    rep.config["maxlen"] = maxlen;
    rep.config["pair"] = pair;

    if (pair != "magnus" && pair != "f2s")
        throw std::invalid_argument("pair must be magnus or f2s");
    DescPtr fd = field_from_shorthand(pair == "magnus" ? "q2" : "f2s");
    Mat a = pair == "magnus" ? magnus(fd, 0) : transcendental_pair(fd, Magnitude::one(2)).a;
    Mat b = pair == "magnus" ? magnus(fd, 1) : transcendental_pair(fd, Magnitude::one(2)).b;
    const DescPtr& d = a.descriptor();
    bool check_minus_two = d->characteristic() == 0;
    FieldElement two = FieldElement::integer(d, 2);
    FieldElement minus_two = FieldElement::integer(d, -2);

    CheckRecord rec = CheckRecord::make("nonparabolic:" + pair);
    Mat ai = a.inverse(), bi = b.inverse();
    const Mat* table[4] = {&a, &ai, &b, &bi};
    std::vector<Mat> stack{Mat::identity(d, 2)};
    walk_reduced(
        maxlen, [&](Letter l) { stack.push_back(stack.back() * (*table[l])); },
        [&] { stack.pop_back(); },
        [&](const Word& w) {
            if (w.empty()) return;
            FieldElement tr = stack.back().trace();
            bool bad = tr == two || (check_minus_two && tr == minus_two);
            if (bad)
                rec.note_fail("word " + w.str() + " has trace " + tr.str());
            else
                rec.note_pass();
        });
    rep.add(std::move(rec));
    return rep;
}

namespace {

std::vector<Vec> isometry_sample_vectors(const DescPtr& d, const ValuationRing& ring, int n,
                                         int count, std::mt19937_64& rng) {
    std::vector<Vec> out;
    for (int j = 0; j < n; ++j) out.push_back(unit_vec(d, n, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                Vec v = unit_vec(d, n, i);
                v[static_cast<size_t>(j)] = -FieldElement::one(d);
                out.push_back(std::move(v));
            }
    std::uniform_int_distribution<int> small(-6, 6), valdist(-2, 2);
    while (static_cast<int>(out.size()) < count) {
        Vec v;
        for (int j = 0; j < n; ++j) {
            FieldElement c = FieldElement::integer(d, small(rng));
            c = c * ring.uniformizer_pow(valdist(rng));
            v.push_back(std::move(c));
        }
        if (!vec_is_zero(v)) out.push_back(std::move(v));
    }
    out.resize(static_cast<size_t>(count));
    return out;
}

Mat random_matrix(const DescPtr& d, const ValuationRing& ring, int n, bool member,
                  std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-5, 5), pick(0, n - 1);
    if (member) {
        // product of elementary unipotent matrices over D: always in SL(n,D)
        Mat m = Mat::identity(d, n);
        for (int step = 0; step < 4; ++step) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            Mat e = Mat::identity(d, n);
            FieldElement v = FieldElement::integer(d, small(rng)) * ring.uniformizer_pow(
                                 std::uniform_int_distribution<int>(0, 2)(rng));
            e.set(i, j, v);
            m = m * e;
        }
        return m;
    }
    Mat m(d, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FieldElement v = FieldElement::integer(d, small(rng));
            v = v * ring.uniformizer_pow(std::uniform_int_distribution<int>(-2, 2)(rng));
            m.set(i, j, v);
        }
    return m;
}

}  // namespace

Report run_isometry_check(const std::string& field, int n, int samples, int vectors) {
    Report rep;
    rep.config["command"] = "isometry-check";
    rep.config["field"] = field;
    rep.config["n"] = n;
    rep.config["samples"] = samples;
    rep.config["vectors"] = vectors;

    DescPtr d = field_from_shorthand(field);
    ValuationRing ring = make_field(d);
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(n));
    std::vector<Vec> sample_vecs = isometry_sample_vectors(d, ring, n, vectors, rng);

    CheckRecord agree = CheckRecord::make("isometry-conditions-agree");
    CheckRecord contradict = CheckRecord::make("isometry-sampling-consistent");
    for (int k = 0; k < samples; ++k) {
        Mat m = random_matrix(d, ring, n, k % 2 == 0, rng);
        IsometryReport r = isometry_audit(m, sample_vecs);
        if (r.exact_conditions_agree())
            agree.note_pass();
        else
            agree.note_fail("conditions (2)-(5) disagree on sample " + std::to_string(k));
        if (r.gl_membership && !r.norm_preserving_on_samples)
            contradict.note_fail("GL(n,D) member fails norm preservation on sample " +
                                 std::to_string(k));
        else
            contradict.note_pass();
    }
    rep.add(std::move(agree));
    rep.add(std::move(contradict));
    return rep;
}

Report run_cover_ball(const std::string& field, int n, int i, int j) {
    Report rep;
    rep.config["command"] = "cover-ball";
    rep.config["field"] = field;
    rep.config["n"] = n;
    rep.config["i"] = i;
    rep.config["j"] = j;

    DescPtr d = field_from_shorthand(field);
    ValuationRing ring = make_field(d);
    std::vector<Vec> translates = cover_ball(i, j, n, ring);
    CoverCheck check = cover_ball_verify(i, j, n, ring, translates);

    Json tr = Json::array();
    for (const auto& v : translates) tr.push_back(vec_str(v));
    rep.config["translates"] = tr;

    CheckRecord count = CheckRecord::make("cover-count");
    if (check.count_ok)
        count.note_pass();
    else
        count.note_fail("expected " + check.expected_count.str() + " translates, got " +
                        std::to_string(translates.size()));
    rep.add(std::move(count));

    CheckRecord part = CheckRecord::make("cover-partition");
    if (check.pairwise_disjoint)
        part.note_pass();
    else
        part.note_fail(check.note);
    if (check.exhaustive)
        part.note_pass();
    else
        part.note_fail(check.note);
    rep.add(std::move(part));
    return rep;
}

Report run_build_decomposition(const RunConfig& cfg, Json* certificate_out) {
    Report rep;
    rep.config["command"] = "build-decomposition";
    rep.config["field"] = cfg.field;
    rep.config["n"] = cfg.n;
    rep.config["target"] = cfg.target;
    rep.config["radius_exp"] = cfg.radius_exp;
    rep.config["eps_exp"] = cfg.eps_exp;

    BuildParams params;
    params.field = field_from_shorthand(cfg.field);
    params.n = cfg.n;
    params.target_id = cfg.target;
    params.radius_exp = cfg.radius_exp;
    params.eps_exp = cfg.eps_exp;
    if (cfg.center != "default" && !cfg.center.empty()) {
        std::vector<Vec> c = parse_seed_list(params.field, cfg.n, cfg.center);
        params.center = c.front();
        rep.config["center"] = cfg.center;
    }
    Certificate cert = build_certificate(params);
    if (certificate_out) *certificate_out = cert.to_json();

    CheckRecord rec = CheckRecord::make("build:" + cfg.target);
    rec.note_pass();
    rec.witnesses.push_back("pieces=" + std::to_string(cert.pieces) +
                            " scheme=" + scheme_str(cert.scheme) + " group=" + cert.group.str());
    rep.add(std::move(rec));
    return rep;
}

Report run_verify_decomposition(const Json& certificate, int depth, const std::string& seeds) {
    Report rep;
    rep.config["command"] = "verify-decomposition";
    rep.config["depth"] = depth;
    rep.config["seeds"] = seeds;

    Certificate cert = Certificate::from_json(certificate);
    rep.config["target"] = cert.target.id;
    rep.config["field"] = shorthand_or_json(cert.target.field);
    rep.config["n"] = cert.target.n;

    VerifyOptions opts;
    opts.depth = depth;
    if (seeds != "default" && !seeds.empty())
        opts.seeds = parse_seed_list(cert.target.field, cert.target.n, seeds);
    rep.add_all(verify_certificate(cert, opts));
    return rep;
}

}  // namespace paradec
