#include "nichols/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "nichols/divisibility.hpp"

namespace nichols {

namespace fs = std::filesystem;

bool RunResult::ok() const {
    for (const auto& [name, pass] : checks)
        if (!pass)
            return false;
    return true;
}

const TraceRow* RunResult::row_for_element(const FiniteGroup& G, int g) const {
    auto cls = G.conjugacy_class(g);
    for (const auto& row : rows)
        for (int c : cls)
            if (row.rep_element == c)
                return &row;
    return nullptr;
}

namespace {

struct GroupRun {
    const CatalogEntry* cat = nullptr;
    YDRealization realization;
};

YDRealization realize_orbits(const CatalogEntry& cat, Field f,
                             const std::vector<RunConfig::OrbitSpec>& orbits) {
    const FiniteGroup& G = cat.group;
    std::vector<std::pair<int, CentralizerCharacter>> blocks;
    for (const auto& spec : orbits) {
        int rep = cat.element(spec.rep);
        std::vector<std::pair<int, Scalar>> gen_values;
        for (const auto& [elt, val] : spec.chi)
            gen_values.push_back({cat.element(elt), Scalar::parse(f, val)});
        auto chi = CentralizerCharacter::extend(G, G.centralizer(rep), gen_values);
        blocks.push_back({rep, std::move(chi)});
    }
    return from_orbits(G, f, blocks);
}

Braiding realize_diagonal(Field f, const std::vector<std::vector<std::string>>& matrix) {
    std::vector<std::vector<Scalar>> q;
    for (const auto& row : matrix) {
        check(row.size() == matrix.size(), "diagonal matrix is not square");
        std::vector<Scalar> r;
        for (const auto& entry : row)
            r.push_back(Scalar::parse(f, entry));
        q.push_back(std::move(r));
    }
    return Braiding::diagonal(f, q);
}

// All characters of the abelian quotient with values in the field's roots
// of unity, as value-per-element tables.
std::vector<std::vector<Scalar>> quotient_characters(const FiniteGroup& G,
                                                     const AbelianDecomposition& dec, Field f) {
    std::vector<std::vector<Scalar>> per_factor;  // candidate root per factor
    Scalar z = Scalar::zeta(f);
    for (int j = 0; j < dec.factors(); ++j) {
        std::vector<Scalar> cands;
        for (int sign = 0; sign < 2; ++sign)
            for (unsigned i = 0; i < f->zeta_order(); ++i) {
                Scalar c = z.pow(i);
                if (sign)
                    c = -c;
                if (!c.pow(dec.orders[j]).is_one())
                    continue;
                bool dup = false;
                for (const auto& e : cands)
                    dup = dup || e == c;
                if (!dup)
                    cands.push_back(c);
            }
        per_factor.push_back(std::move(cands));
    }
    std::vector<std::vector<Scalar>> out;
    std::vector<size_t> idx(dec.factors(), 0);
    while (true) {
        std::vector<Scalar> lam(G.size(), Scalar::one(f));
        for (int g = 0; g < G.size(); ++g)
            for (int j = 0; j < dec.factors(); ++j)
                lam[g] *= per_factor[j][idx[j]].pow(dec.coords[g][j]);
        out.push_back(std::move(lam));
        int j = 0;
        for (; j < dec.factors(); ++j) {
            if (++idx[j] < per_factor[j].size())
                break;
            idx[j] = 0;
        }
        if (j == dec.factors())
            break;
    }
    if (dec.factors() == 0)
        out.assign(1, std::vector<Scalar>(G.size(), Scalar::one(f)));
    return out;
}

void verify_common(RunResult& res, const Algebra& A, bool full, unsigned threads) {
    res.checks.push_back({"layer 1 spans the letters", A.dims().size() > 1 &&
                                                           A.dims()[1] == A.braiding().letters()});
    if (A.complete())
        res.checks.push_back({"Hilbert series palindromic", ipoly_palindromic(A.hilbert_int())});
    if (full) {
        bool oracle_ok = true;
        for (int n = 1; n <= 3 && n <= A.computed_degree(); ++n) {
            double size = std::pow((double)A.braiding().letters(), n);
            if (size > 20736)
                break;
            long rank = symmetrizer_rank(A.braiding(), n);
            oracle_ok = oracle_ok && rank == A.dims()[n];
        }
        res.checks.push_back({"symmetrizer rank oracle (degrees <= 3)", oracle_ok});
    }
    (void)threads;
}

void factor_rows(RunResult& res, const RunConfig& cfg) {
    FactorBounds bounds{cfg.factor_max_count, cfg.factor_max_power};
    bool roundtrip = true;
    for (auto& row : res.rows) {
        row.factorization = qfactor(row.trace, bounds);
        row.at_one = row.trace.at_one();
        roundtrip = roundtrip && row.factorization.expand() == row.trace;
    }
    res.checks.push_back({"factorization round-trip", roundtrip});
}

void compare_golden(RunResult& res, const RunConfig& cfg, const CatalogEntry* cat) {
    if (cfg.golden.empty())
        return;
    std::ifstream is(cfg.golden);
    check(is.good(), "cannot open golden table " + cfg.golden);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto bar = line.find('|');
        check(bar != std::string::npos, cfg.golden + ": line without '|'");
        std::string key = trim(line.substr(0, bar));
        std::string expected = trim(line.substr(bar + 1));
        TracePoly want = parse_qproduct(res.field, expected);
        const TraceRow* row = nullptr;
        if (cat) {
            int g = cat->element(key);
            for (const auto& r : res.rows) {
                if (r.rep_element < 0)
                    continue;
                auto cls = cat->group.conjugacy_class(r.rep_element);
                for (int c : cls)
                    if (c == g)
                        row = &r;
            }
        } else {
            for (const auto& r : res.rows)
                if (r.label == key)
                    row = &r;
        }
        check(row != nullptr, cfg.golden + ": no row matches '" + key + "'");
        res.checks.push_back({"table line " + key, row->trace == want});
    }
}

void subnichols_checks(RunResult& res, const RunConfig& cfg, const GroupRun& gr, const Algebra& A,
                       const RunOptions& opts) {
    if (cfg.subgroup_generators.empty())
        return;
    const CatalogEntry& cat = *gr.cat;
    const FiniteGroup& G = cat.group;
    check(gr.realization.blocks.size() == 1, "sub-Nichols comparison needs a single orbit");
    int rep = gr.realization.blocks[0].rep;
    std::vector<int> seed;
    for (const auto& w : cfg.subgroup_generators)
        seed.push_back(cat.element(w));
    std::vector<int> sub_elems = G.subgroup_closure(seed);
    std::vector<Perm> sub_perms;
    for (int s : sub_elems)
        sub_perms.push_back(G.perm(s));
    FiniteGroup Gp = FiniteGroup::from_generators(sub_perms);
    auto idx_in_sub = [&](int g) -> std::optional<int> { return Gp.element_by_perm(G.perm(g)); };
    auto rep_in_sub = idx_in_sub(rep);
    check(rep_in_sub.has_value(), "orbit representative does not lie in the subgroup");
    // restricted character on Cent_{G'}(rep)
    std::vector<std::pair<int, Scalar>> gen_values;
    for (int c : Gp.centralizer(*rep_in_sub)) {
        Perm p = Gp.perm(c);
        auto big = G.element_by_perm(p);
        gen_values.push_back({c, gr.realization.blocks[0].chi.value(*big)});
    }
    CentralizerCharacter chi_p;
    chi_p.domain = Gp.centralizer(*rep_in_sub);
    for (auto& [c, v] : gen_values)
        chi_p.values.emplace(c, v);
    YDRealization small = from_orbits(Gp, res.field, {{*rep_in_sub, chi_p}});
    BuildOptions bopts;
    bopts.max_degree = cfg.max_degree;
    bopts.threads = opts.threads;
    Algebra Ap = Algebra::build(small.b, bopts);
    check(Ap.complete(), "sub-Nichols algebra did not terminate below the cap");
    // the shift letter and its commutation scalar, when configured
    int xi_letter = -1;
    if (!cfg.xi_element.empty()) {
        int x_elem = cat.element(cfg.xi_element);
        for (int l = 0; l < gr.realization.letter_count(); ++l)
            if (gr.realization.letter_element(l) == x_elem)
                xi_letter = l;
        check(xi_letter >= 0, "xi_element is not in the support of the module");
    }
    unsigned m = cfg.xi_element.empty() ? 0 : sector_order(A);
    for (int h : Gp.class_representatives()) {
        auto big = G.element_by_perm(Gp.perm(h));
        std::string label = Gp.element_name(h);
        GradedTraceReport big_trace =
            graded_trace(A, group_action_operator(gr.realization, *big), label, opts.threads);
        GradedTraceReport small_trace =
            graded_trace(Ap, group_action_operator(small, h), label, opts.threads);
        auto line = divisibility_check(big_trace.trace, small_trace.trace, label);
        res.checks.push_back({"sub-Nichols divisibility at " + label, line.divides});
        if (xi_letter < 0)
            continue;
        int x_elem = gr.realization.letter_element(xi_letter);
        if (G.mul(*big, x_elem) != G.mul(x_elem, *big))
            continue;
        // lambda = prod q_{y_i, x} over a letter word for the element
        std::optional<Scalar> lambda;
        {
            // shortest expression of the element as a product of letters
            std::map<int, std::vector<int>> word_of{{G.identity(), {}}};
            std::vector<int> queue{G.identity()};
            for (size_t qi = 0; qi < queue.size() && !word_of.count(*big); ++qi)
                for (int l = 0; l < gr.realization.letter_count(); ++l) {
                    int nxt = G.mul(queue[qi], gr.realization.letter_element(l));
                    if (!word_of.count(nxt)) {
                        auto w = word_of[queue[qi]];
                        w.push_back(l);
                        word_of[nxt] = std::move(w);
                        queue.push_back(nxt);
                    }
                }
            if (word_of.count(*big)) {
                Scalar lam = Scalar::one(res.field);
                for (int l : word_of[*big])
                    lam *= A.braiding().q(l, xi_letter);
                lambda = lam;
            }
        }
        if (!lambda)
            continue;
        if (!xi_commutes(A, xi_letter, group_action_operator(gr.realization, *big), *lambda))
            continue;  // hypothesis not satisfied; no prediction to assert
        TracePoly divisor = qsymbol(res.field, m, *lambda, 1) * small_trace.trace;
        auto line2 = divisibility_check(big_trace.trace, divisor, label);
        res.checks.push_back({"sub-Nichols shift divisor at " + label, line2.divides});
    }
}

}  // namespace

Braiding braiding_from_config(const RunConfig& cfg) {
    Field f = FieldContext::get(cfg.field);
    if (!cfg.group_catalog.empty())
        return realize_orbits(catalog(cfg.group_catalog), f, cfg.orbits).b;
    return realize_diagonal(f, cfg.diagonal_matrix);
}

RunResult run_config(const RunConfig& cfg, const RunOptions& opts) {
    RunResult res;
    Field f = FieldContext::get(cfg.field);
    res.field = f;

    std::optional<GroupRun> gr;
    Braiding braiding;
    if (!cfg.group_catalog.empty()) {
        gr.emplace();
        gr->cat = &catalog(cfg.group_catalog);
        gr->realization = realize_orbits(*gr->cat, f, cfg.orbits);
        braiding = gr->realization.b;
        res.group_name = cfg.group_catalog;
        res.title = cfg.group_catalog + " over " + f->describe();
    } else {
        braiding = realize_diagonal(f, cfg.diagonal_matrix);
        res.title = "diagonal braiding over " + f->describe();
    }
    res.letters = braiding.letters();

    BuildOptions bopts;
    bopts.max_degree = cfg.duality_shortcut ? cfg.top_degree / 2 : cfg.max_degree;
    bopts.threads = opts.threads;
    bopts.progress = opts.progress;
    if (opts.use_cache && !opts.out_dir.empty()) {
        fs::create_directories(fs::path(opts.out_dir) / "cache");
        bopts.cache_file = (fs::path(opts.out_dir) / "cache" / (braiding.content_hash() + ".layers")).string();
    }
    Algebra A = Algebra::build(braiding, bopts);
    res.dims = A.hilbert_int();
    res.complete = A.complete();
    if (cfg.duality_shortcut) {
        res.top_degree = cfg.top_degree;
        res.notes.push_back("duality shortcut: layers built to degree " +
                            std::to_string(A.computed_degree()) + " of " +
                            std::to_string(cfg.top_degree));
    } else {
        res.checks.push_back({"algebra complete below degree cap", A.complete()});
        if (A.complete()) {
            res.top_degree = A.top_degree();
            res.dimension = A.dimension();
        }
    }

    const bool full = (opts.verify_override.empty() ? cfg.verify_level : opts.verify_override) ==
                      "full";
    verify_common(res, A, full, opts.threads);

    // trace rows
    if (cfg.traces != "none" && gr) {
        const FiniteGroup& G = gr->cat->group;
        std::vector<int> reps = cfg.traces == "identity" ? std::vector<int>{G.identity()}
                                                         : G.class_representatives();
        if (!cfg.duality_shortcut) {
            check(A.complete(), "cap reached without a zero layer; traces need duality_shortcut");
            bool class_invariant = true;
            for (int g : reps) {
                TraceRow row;
                row.rep_element = g;
                row.label = G.element_name(g);
                row.class_size = (long)G.conjugacy_class(g).size();
                auto rep = graded_trace(A, group_action_operator(gr->realization, g), row.label,
                                        opts.threads);
                row.trace = rep.trace;
                row.lambda = rep.top_scalar;
                res.rows.push_back(std::move(row));
                if (full && g != G.identity()) {
                    // class invariance on one conjugate
                    int t = G.generator(0);
                    int conj = G.conjugate(t, g);
                    auto other = graded_trace(A, group_action_operator(gr->realization, conj), "",
                                              opts.threads);
                    class_invariant = class_invariant && other.trace == rep.trace;
                }
            }
            if (full)
                res.checks.push_back({"trace is a class function (sampled)", class_invariant});
            if (full && A.complete() && A.layer(A.top_degree()).dim() == 1) {
                bool duality_ok = true;
                for (int g : reps) {
                    auto pr = poincare_check(A, group_action_operator(gr->realization, g),
                                             opts.threads);
                    duality_ok = duality_ok && pr.holds;
                }
                res.checks.push_back({"Poincare duality on all class representatives", duality_ok});
            }
        } else {
            check(cfg.top_degree % 2 == 0, "duality shortcut needs an even top degree");
            const int half = cfg.top_degree / 2;
            check(A.computed_degree() >= half, "shortcut build fell short of half depth");
            std::map<int, TracePoly> partial;
            for (int g : reps)
                partial.emplace(g, graded_trace_partial(
                                       A, group_action_operator(gr->realization, g), half,
                                       opts.threads));
            auto rep_of = [&](int g) {
                auto cls = G.conjugacy_class(g);
                return cls.front();
            };
            // the duality scalar is a character of the abelian quotient;
            // brute-force the finitely many candidates against the middle
            // coefficients
            AbelianDecomposition dec = abelianization(G);
            auto cands = quotient_characters(G, dec, f);
            std::vector<std::vector<Scalar>> viable;
            for (const auto& lam : cands) {
                bool ok = true;
                for (int g : reps) {
                    int gi = rep_of(G.inv(g));
                    if (!(partial.at(g).coeff(half) == lam[g] * partial.at(gi).coeff(half))) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    viable.push_back(lam);
            }
            check(!viable.empty(), "no duality scalar satisfies the middle coefficients");
            bool unique_on_reps = true;
            for (const auto& lam : viable)
                for (int g : reps)
                    unique_on_reps = unique_on_reps && lam[g] == viable[0][g];
            res.checks.push_back({"duality scalar uniquely determined", unique_on_reps});
            bool middles = true;
            for (int g : reps) {
                TraceRow row;
                row.rep_element = g;
                row.label = G.element_name(g);
                row.class_size = (long)G.conjugacy_class(g).size();
                row.lambda = viable[0][g];
                row.trace = duality_completion(partial.at(g), partial.at(rep_of(G.inv(g))),
                                               viable[0][g], cfg.top_degree);
                middles = middles &&
                          partial.at(g).coeff(half) ==
                              viable[0][g] * partial.at(rep_of(G.inv(g))).coeff(half);
                res.rows.push_back(std::move(row));
            }
            res.checks.push_back({"middle coefficient consistency", middles});
        }
    } else if (cfg.traces != "none") {
        // diagonal input: identity, the diagonal generators, then the
        // configured letter permutations
        check(A.complete(), "cap reached without a zero layer");
        TraceRow id_row;
        id_row.label = "id";
        auto id_rep = graded_trace(A, LetterOperator::identity(braiding), "id", opts.threads);
        id_row.trace = id_rep.trace;
        id_row.lambda = id_rep.top_scalar;
        res.rows.push_back(std::move(id_row));
        for (int i = 0; i < braiding.letters(); ++i) {
            std::vector<int> sigma(braiding.letters());
            std::vector<Scalar> lambda;
            for (int j = 0; j < braiding.letters(); ++j) {
                sigma[j] = j;
                lambda.push_back(braiding.q(i, j));
            }
            TraceRow row;
            row.label = "g" + std::to_string(i + 1);
            auto rep = graded_trace(A, LetterOperator::make(braiding, sigma, lambda), row.label,
                                    opts.threads);
            row.trace = rep.trace;
            row.lambda = rep.top_scalar;
            res.rows.push_back(std::move(row));
        }
        for (const auto& spec : cfg.operators) {
            Perm p = perm_parse(spec.perm, braiding.letters());
            std::vector<int> sigma(p.begin(), p.end());
            std::vector<Scalar> lambda(braiding.letters(), Scalar::one(f));
            for (size_t i = 0; i < spec.scalars.size() && i < lambda.size(); ++i)
                lambda[i] = Scalar::parse(f, spec.scalars[i]);
            TraceRow row;
            row.label = spec.name;
            auto rep = graded_trace(A, LetterOperator::make(braiding, sigma, lambda), row.label,
                                    opts.threads);
            row.trace = rep.trace;
            row.lambda = rep.top_scalar;
            res.rows.push_back(std::move(row));
        }
        if (full && A.complete() && A.layer(A.top_degree()).dim() == 1) {
            bool duality_ok = true;
            for (const auto& spec : cfg.operators) {
                Perm p = perm_parse(spec.perm, braiding.letters());
                std::vector<int> sigma(p.begin(), p.end());
                std::vector<Scalar> lambda(braiding.letters(), Scalar::one(f));
                for (size_t i = 0; i < spec.scalars.size() && i < lambda.size(); ++i)
                    lambda[i] = Scalar::parse(f, spec.scalars[i]);
                auto pr = poincare_check(A, LetterOperator::make(braiding, sigma, lambda),
                                         opts.threads);
                duality_ok = duality_ok && pr.holds;
            }
            res.checks.push_back({"Poincare duality on configured operators", duality_ok});
        }
    }

    factor_rows(res, cfg);

    if (full && res.complete) {
        // balancedness <-> divisibility in both directions, small moduli
        bool equiv = true;
        Scalar z = Scalar::zeta(f);
        for (const auto& row : res.rows) {
            for (unsigned k = 2; k <= 4; ++k)
                for (int sign = 0; sign < 2; ++sign)
                    for (unsigned i = 0; i < f->zeta_order(); ++i) {
                        Scalar lam = z.pow(i);
                        if (sign)
                            lam = -lam;
                        if (!lam.pow(k).is_one())
                            continue;
                        bool bal = balanced(row.trace, k, lam);
                        bool div = row.trace.is_zero() ||
                                   row.trace.exact_div(qsymbol(f, k, lam, 1)).second;
                        equiv = equiv && (bal == div);
                    }
        }
        res.checks.push_back({"balancedness matches divisibility (k <= 4)", equiv});
    }

    compare_golden(res, cfg, gr ? gr->cat : nullptr);
    if (gr)
        subnichols_checks(res, cfg, *gr, A, opts);

    if (!opts.out_dir.empty())
        write_reports(res, opts.out_dir);
    return res;
}

void write_reports(const RunResult& res, const std::string& out_dir) {
    fs::create_directories(out_dir);
    {
        std::ofstream os(fs::path(out_dir) / "report.txt");
        os << res.title << "\n";
        os << "letters: " << res.letters << "\n";
        os << "layer dimensions: " << ipoly_str(res.dims) << "\n";
        if (res.complete)
            os << "dimension: " << res.dimension << ", top degree: " << res.top_degree << "\n";
        else if (res.top_degree > 0)
            os << "top degree (assumed): " << res.top_degree << "\n";
        else
            os << "incomplete: degree cap reached\n";
        for (const auto& note : res.notes)
            os << "note: " << note << "\n";
        os << "\ngraded traces:\n";
        for (const auto& row : res.rows) {
            os << "  " << row.label << ": " << row.factorization.str() << "\n";
            os << "    = " << row.trace.str() << "\n";
        }
        os << "\nchecks:\n";
        for (const auto& [name, pass] : res.checks)
            os << "  " << (pass ? "pass" : "FAIL") << "  " << name << "\n";
    }
    {
        std::ofstream os(fs::path(out_dir) / "report.tsv");
        for (const auto& row : res.rows) {
            os << row.label << "\t";
            for (int i = 0; i <= row.trace.degree(); ++i)
                os << (i ? "," : "") << row.trace.coeff(i).str();
            os << "\t" << row.factorization.machine() << "\t" << row.at_one.str() << "\t";
            os << (row.lambda ? row.lambda->str() : "-") << "\n";
        }
    }
}

}  // namespace nichols
