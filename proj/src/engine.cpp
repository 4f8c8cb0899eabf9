#include "acmforge/engine.hpp"

#include <map>
#include <sstream>

#include "acmforge/chern.hpp"
#include "acmforge/constructions.hpp"
#include "acmforge/idealops.hpp"
#include "acmforge/jobspec.hpp"
#include "json.hpp"

namespace acmforge {
namespace {

using ordered_json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string ring_label(Over over) { return over == Over::quotient ? "S_X" : "S"; }

// S(-2)^4 + S(-3) style summand display; degs c stand for R(-c)
std::string free_str(const FreeModule& fm, const std::string& rn) {
    if (fm.degs.empty()) return "0";
    std::map<int, int> mult;
    for (int d : fm.degs) ++mult[d];
    std::ostringstream out;
    bool first = true;
    for (auto [c, k] : mult) {
        if (!first) out << " + ";
        first = false;
        out << rn;
        if (c != 0) out << "(" << -c << ")";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

std::string int_list(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

ordered_json poly_strings(const std::vector<Poly>& ps) {
    ordered_json a = ordered_json::array();
    for (const auto& p : ps) a.push_back(p_str(p));
    return a;
}

ordered_json matrix_json(const GradedMatrix& m) {
    ordered_json cols = ordered_json::array();
    for (const auto& v : m.col) {
        ordered_json col = ordered_json::array();
        for (int i = 0; i < v.rank(); ++i) col.push_back(v[i].ring() ? p_str(v[i]) : "0");
        cols.push_back(std::move(col));
    }
    ordered_json j;
    j["tgt"] = m.tgt.degs;
    j["src"] = m.src.degs;
    j["cols"] = std::move(cols);
    return j;
}

ordered_json matrix_rows_json(const GradedMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const Poly& e = m.at(i, j);
            row.push_back(e.ring() ? p_str(e) : "0");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json cert_json(const QuestionCertificate& c) {
    ordered_json j;
    j["acm"] = c.acm;
    j["split"] = c.split;
    j["line_twists"] = c.line_twists;
    j["core_size"] = c.core_size;
    j["q2"] = c.q2;
    j["q3"] = c.q3;
    j["chain"] = c.chain;
    j["caveat"] = c.caveat;
    return j;
}

void cert_text(std::ostringstream& out, const QuestionCertificate& c) {
    out << "certificate:\n";
    out << "  acm: " << yes_no(c.acm) << "\n";
    out << "  split: " << yes_no(c.split) << "\n";
    if (!c.line_twists.empty()) out << "  line twists: " << int_list(c.line_twists) << "\n";
    if (c.core_size > 0) out << "  core size: " << c.core_size << " x " << c.core_size << "\n";
    out << "  q2: " << c.q2 << "\n";
    out << "  q3: " << c.q3 << "\n";
    for (const auto& step : c.chain) out << "  - " << step << "\n";
    out << "  caveat: " << c.caveat << "\n";
}

struct Ctx {
    JobSpec job;
    Flags flags;
    std::ostringstream text;
    ordered_json json;
    std::vector<std::string> verify_notes;
};

// saturated ambient ideal of the subscheme cut out by the job ideal plus f
std::vector<Poly> subscheme_ideal(const JobSpec& job) {
    require(job.has_ideal, "job has no ideal line");
    std::vector<Poly> gens = job.ideal;
    if (!job.f.is_zero()) {
        auto gb = groebner_ideal(job.ring, gens);
        if (!ideal_member(job.f, job.ring, gb)) gens.push_back(job.f);
    }
    return ideal_saturate(job.ring, gens, irrelevant_ideal(job.ring));
}

// resolve/betti act on the module if one is given, else on the ideal itself
PresentedModule resolve_target(const JobSpec& job) {
    require(job.ring != nullptr, "job has no ring line");
    if (job.has_module) return job_module(job);
    require(job.has_ideal, "job has no module or ideal line");
    Over over = job.f.is_zero() ? Over::ambient : Over::quotient;
    return present_submodule(over, free_module(job.ring, {0}),
                             to_vec1(job.ring, job.ideal), job.f);
}

// hilbert/h0 measure the module if given, else the coordinate ring S/I (mod f)
PresentedModule measure_target(const JobSpec& job) {
    require(job.ring != nullptr, "job has no ring line");
    if (job.has_module) return job_module(job);
    Over over = job.f.is_zero() ? Over::ambient : Over::quotient;
    return cyclic_module(over, job.ring, job.has_ideal ? job.ideal : std::vector<Poly>{},
                         job.f);
}

// mf/split/c2/kleiman act on the module if given, else on the syzygy bundle
// of the saturated subscheme ideal on X
PresentedModule bundle_target(const JobSpec& job) {
    require(job.ring != nullptr, "job has no ring line");
    if (job.has_module) {
        PresentedModule m = job_module(job);
        require(m.over == Over::quotient, "a bundle target needs a hypersurface line");
        return m;
    }
    require(!job.f.is_zero(), "a bundle target needs a hypersurface line");
    return mcm_syzygy_bundle(job.ring, subscheme_ideal(job), job.f);
}

void verify_euler(Ctx& c, const PresentedModule& m) {
    Resolution rs = minimal_resolution_over_s(m);
    ensure(zt_eq(resolution_numerator(rs), hilbert_of(m).numerator),
           "resolution numerator disagrees with the hilbert numerator");
    c.verify_notes.push_back("euler identity of the ambient resolution");
}

void cmd_gb(Ctx& c) {
    require(c.job.ring != nullptr, "job has no ring line");
    require(c.job.has_ideal, "job has no ideal line");
    std::vector<Poly> basis = groebner_ideal(c.job.ring, c.job.ideal);
    c.text << "reduced groebner basis, " << basis.size()
           << (basis.size() == 1 ? " element\n" : " elements\n");
    for (const auto& p : basis) c.text << p_str(p) << "\n";
    c.json["command"] = "gb";
    c.json["basis"] = poly_strings(basis);
    if (c.flags.verify) {
        for (const auto& g : c.job.ideal)
            ensure(nf_poly(g, c.job.ring, basis).is_zero(),
                   "an input generator does not reduce to zero against the basis");
        c.verify_notes.push_back("input generators reduce to zero against the basis");
    }
}

void resolution_common(Ctx& c, const char* name, bool grid) {
    PresentedModule m = resolve_target(c.job);
    Resolution res = minimal_resolution(m, c.flags.max_length);
    BettiTable b = betti_of(res);
    const std::string rn = ring_label(res.over);
    if (grid) {
        c.text << betti_grid(b);
        if (b.truncated) c.text << "truncated at max length " << c.flags.max_length << "\n";
        if (b.periodic) c.text << "periodic tail, twist step " << res.period_shift << "\n";
        c.json = ordered_json::parse(betti_json(b));
        c.json["command"] = name;
    } else {
        c.text << "minimal resolution over " << rn;
        if (res.over == Over::quotient) c.text << ", f = " << p_str(res.f);
        c.text << "\n";
        for (int k = 0; k <= res.length(); ++k)
            c.text << "F" << k << " = " << free_str(res.free_at(k), rn) << "\n";
        c.text << "length: " << res.length() << "\n";
        if (res.truncated) c.text << "truncated at max length " << c.flags.max_length << "\n";
        if (res.periodic) c.text << "periodic tail, twist step " << res.period_shift << "\n";
        ordered_json diffs = ordered_json::array();
        for (const auto& d : res.diff) diffs.push_back(matrix_json(d));
        c.json["command"] = name;
        c.json["over"] = res.over == Over::quotient ? "quotient" : "ambient";
        if (res.over == Over::quotient) c.json["f"] = p_str(res.f);
        c.json["f0"] = res.f0.degs;
        c.json["diff"] = std::move(diffs);
        c.json["truncated"] = res.truncated;
        c.json["periodic"] = res.periodic;
        c.json["period_shift"] = res.period_shift;
    }
    if (c.flags.verify) {
        for (int k = 0; k + 1 < res.length(); ++k) {
            GradedMatrix z = compose(res.diff[k], res.diff[k + 1]);
            for (const auto& col : z.col)
                ensure(col.is_zero(), "consecutive differentials do not compose to zero");
        }
        c.verify_notes.push_back("consecutive differentials compose to zero");
        if (res.over == Over::ambient) verify_euler(c, m);
    }
}

void cmd_resolve(Ctx& c) { resolution_common(c, "resolve", false); }
void cmd_betti(Ctx& c) { resolution_common(c, "betti", true); }

void cmd_acm(Ctx& c) {
    require(c.job.ring != nullptr, "job has no ring line");
    const Ring& r = c.job.ring;
    std::vector<Poly> gens = c.job.has_ideal ? c.job.ideal : std::vector<Poly>{};
    require(c.job.has_ideal, "job has no ideal line");
    if (!c.job.f.is_zero()) {
        auto gb = groebner_ideal(r, gens);
        if (!ideal_member(c.job.f, r, gb)) gens.push_back(c.job.f);
    }
    std::vector<Poly> sat = ideal_saturate(r, gens, irrelevant_ideal(r));
    bool input_saturated = ideal_equal(r, groebner_ideal(r, gens), sat);
    PresentedModule m = cyclic_module(Over::ambient, r, sat);
    HilbertData h = hilbert_of(m);
    require(h.dim >= 0, "the unit ideal has no subscheme");
    int codim = r->nvars() - h.dim;
    int pd = projective_dimension_s(m);
    bool acm = pd == codim;
    c.text << "input already saturated: " << yes_no(input_saturated) << "\n";
    c.text << "projective dimension of S/I over S: " << pd << "\n";
    c.text << "codimension: " << codim << "\n";
    c.text << "arithmetically cohen-macaulay: " << yes_no(acm) << "\n";
    c.json["command"] = "acm";
    c.json["acm"] = acm;
    c.json["pd"] = pd;
    c.json["codim"] = codim;
    c.json["input_saturated"] = input_saturated;
    if (c.flags.verify) {
        ensure(acm == ideal_acm(r, sat), "direct verdict disagrees with the library verdict");
        c.verify_notes.push_back("verdict matches the one-call certification");
        verify_euler(c, m);
    }
}

void cmd_mf(Ctx& c) {
    PresentedModule m = bundle_target(c.job);
    MatrixFactorization mf = mf_extract(m);
    c.text << "size: " << mf.phi.rows() << " x " << mf.phi.cols() << "\n";
    c.text << "d = " << mf.f.degree() << "\n";
    c.text << "reduced: " << yes_no(mf.reduced) << "\n";
    c.text << "phi:\n" << matrix_str(mf.phi);
    c.text << "psi:\n" << matrix_str(mf.psi);
    c.json["size"] = mf.phi.rows();
    c.json["d"] = mf.f.degree();
    c.json["phi"] = matrix_rows_json(mf.phi);
    c.json["psi"] = matrix_rows_json(mf.psi);
    c.json["reduced"] = mf.reduced;
    if (c.flags.verify) {
        Rng rng(c.flags.seed);
        mf_check(mf, &rng);
        c.verify_notes.push_back("product and determinant laws re-checked");
    }
}

void cmd_split(Ctx& c) {
    PresentedModule m = bundle_target(c.job);
    SplitResult s = split_detect(m);
    int core_size = s.core ? s.core->phi.rows() : 0;
    c.text << "fully split: " << yes_no(s.fully_split) << "\n";
    c.text << "line twists: " << (s.line_twists.empty() ? "none" : int_list(s.line_twists))
           << "\n";
    c.text << "core size: " << core_size << "\n";
    c.json["command"] = "split";
    c.json["fully_split"] = s.fully_split;
    c.json["line_twists"] = s.line_twists;
    c.json["core_size"] = core_size;
    if (c.flags.verify && s.core) {
        Rng rng(c.flags.seed);
        mf_check(*s.core, &rng);
        c.verify_notes.push_back("core factorization laws re-checked");
    }
}

void cmd_h0(Ctx& c) {
    PresentedModule m = measure_target(c.job);
    long long v = h0_twist(m, c.flags.nu);
    c.text << "h0 at twist " << c.flags.nu << ": " << v << "\n";
    c.json["command"] = "h0";
    c.json["nu"] = c.flags.nu;
    c.json["value"] = v;
    if (c.flags.verify) verify_euler(c, m);
}

void cmd_hilbert(Ctx& c) {
    PresentedModule m = measure_target(c.job);
    HilbertData h = hilbert_of(m);
    c.text << "numerator: " << zt_str(h.numerator) << "\n";
    c.text << "dimension: " << h.dim << "\n";
    c.text << "degree: " << h.degree << "\n";
    c.json["command"] = "hilbert";
    ordered_json num;
    num["low"] = h.numerator.low;
    num["coeffs"] = h.numerator.c;
    c.json["numerator"] = std::move(num);
    c.json["dim"] = h.dim;
    c.json["degree"] = h.degree;
    if (c.flags.verify) verify_euler(c, m);
}

void cmd_c2(Ctx& c) {
    PresentedModule m = bundle_target(c.job);
    ChernData cd = chern_of(m);
    c.text << "d = " << cd.d << "\n";
    c.text << "rank: " << cd.rank << "\n";
    c.text << "deg c1 = " << cd.deg_c1 << "\n";
    c.text << "deg c2 = " << cd.deg_c2 << "\n";
    c.json["command"] = "c2";
    c.json["d"] = cd.d;
    c.json["rank"] = cd.rank;
    c.json["deg_c1"] = cd.deg_c1;
    c.json["deg_c2"] = cd.deg_c2;
    if (c.flags.verify) {
        if (m.rel.cols() == 0) {
            std::vector<int> tw;
            for (int dgen : m.gens.degs) tw.push_back(-dgen);
            std::sort(tw.begin(), tw.end());
            ChernData sp = chern_split(cd.d, tw);
            ensure(sp.rank == cd.rank && sp.deg_c1 == cd.deg_c1 && sp.deg_c2 == cd.deg_c2,
                   "chern data disagrees with the split closed form");
            c.verify_notes.push_back("chern data matches the split closed form");
        } else {
            verify_euler(c, m);
        }
    }
}

void cmd_report(Ctx& c) {
    require(c.job.ring != nullptr, "job has no ring line");
    require(!c.job.f.is_zero(), "report needs a hypersurface line");
    std::vector<Poly> sat = subscheme_ideal(c.job);
    DivisibilityReport rep = divisibility_report(c.job.ring, sat, c.job.f);
    c.text << "deg Y = " << rep.deg_y << " (mod d: " << rep.res_y_mod_d << ")\n";
    c.text << "deg c2 = " << rep.deg_c2 << " (mod d: " << rep.res_c2_mod_d << ")\n";
    c.text << "d = " << rep.d << "\n";
    c.text << "equivalent: " << yes_no(rep.equivalent) << "\n";
    c.json["deg_Y"] = rep.deg_y;
    c.json["deg_c2"] = rep.deg_c2;
    c.json["d"] = rep.d;
    c.json["res_Y_mod_d"] = rep.res_y_mod_d;
    c.json["res_c2_mod_d"] = rep.res_c2_mod_d;
    c.json["equivalent"] = rep.equivalent;
    if (c.flags.verify)
        verify_euler(c, cyclic_module(Over::ambient, c.job.ring, sat));
}

void cmd_voisin(Ctx& c) {
    bool random_route = c.job.f.is_zero();
    VoisinConfig cfg = random_route
                           ? voisin_build(c.flags.d, c.flags.seed, c.flags.retries)
                           : voisin_build_with(c.job.ring, c.job.f);
    c.text << "d = " << cfg.d << "\n";
    if (random_route) c.text << "seed = " << c.flags.seed << "\n";
    c.text << "f = " << p_str(cfg.f) << "\n";
    c.text << "smooth: " << yes_no(cfg.smooth) << "\n";
    c.text << "I_Y: " << cfg.i_y.size() << " generators\n";
    c.text << "generator degrees on X: " << int_list(cfg.gen_degrees) << "\n";
    c.text << "G = coker of " << free_str(cfg.g.rel.src, "S_X") << " -> "
           << free_str(cfg.g.gens, "S_X") << "\n";
    cert_text(c.text, cfg.cert);
    c.json["command"] = "voisin";
    c.json["d"] = cfg.d;
    if (random_route) c.json["seed"] = c.flags.seed;
    c.json["f"] = p_str(cfg.f);
    c.json["smooth"] = cfg.smooth;
    c.json["i_sigma"] = poly_strings(cfg.i_sigma);
    c.json["i_z"] = poly_strings(cfg.i_z);
    c.json["i_y"] = poly_strings(cfg.i_y);
    c.json["gen_degrees"] = cfg.gen_degrees;
    c.json["g_gens"] = cfg.g.gens.degs;
    c.json["cert"] = cert_json(cfg.cert);
    if (c.flags.verify) {
        const Ring& r = cfg.ring;
        std::vector<Poly> a = {p_var(r, 0), p_var(r, 1), cfg.f};
        std::vector<Poly> b = {p_var(r, 2), p_var(r, 3), cfg.f};
        auto inter = ideal_intersect(r, a, b);
        ensure(ideal_equal(r, groebner_ideal(r, cfg.i_y), groebner_ideal(r, inter)),
               "residual ideal disagrees with the two-component intersection");
        c.verify_notes.push_back("residual ideal matches the two-component intersection");
    }
}

void cmd_linspace(Ctx& c) {
    require(c.job.ring != nullptr, "job has no ring line");
    require(!c.job.f.is_zero(), "linspace needs a hypersurface line");
    require(c.job.has_linear, "linspace needs a linear line");
    std::vector<Poly> forms =
        c.job.linear_empty ? irrelevant_ideal(c.job.ring) : c.job.linear;
    LinspaceResult lr = linear_space_bundle(c.job.ring, c.job.f, forms);
    int core_size = lr.split.core ? lr.split.core->phi.rows() : 0;
    c.text << "codimension of L in X: " << lr.r << "\n";
    c.text << "M: " << lr.m.gens.rank() << " generators, degrees "
           << int_list(lr.m.gens.degs) << "\n";
    c.text << "maximal cohen-macaulay: " << yes_no(lr.mcm) << "\n";
    c.text << "fully split: " << yes_no(lr.split.fully_split) << "\n";
    c.text << "line twists: "
           << (lr.split.line_twists.empty() ? "none" : int_list(lr.split.line_twists)) << "\n";
    c.text << "core size: " << core_size << "\n";
    c.text << "caveat: " << lr.caveat << "\n";
    c.json["command"] = "linspace";
    c.json["r"] = lr.r;
    c.json["gens"] = lr.m.gens.degs;
    c.json["mcm"] = lr.mcm;
    c.json["fully_split"] = lr.split.fully_split;
    c.json["line_twists"] = lr.split.line_twists;
    c.json["core_size"] = core_size;
    c.json["caveat"] = lr.caveat;
    if (c.flags.verify && lr.split.core) {
        Rng rng(c.flags.seed);
        mf_check(*lr.split.core, &rng);
        c.verify_notes.push_back("core factorization laws re-checked");
    }
}

void cmd_kleiman(Ctx& c) {
    PresentedModule g = bundle_target(c.job);
    std::vector<int> twists = c.job.has_twists ? c.job.twists : std::vector<int>{};
    KleimanResult kr = kleiman_locus(g, twists, c.flags.seed, c.flags.retries);
    c.text << "twists used: " << int_list(kr.twists) << "\n";
    c.text << "retries used: " << kr.retries_used << "\n";
    c.text << "deg Y = " << kr.deg_y << "\n";
    c.text << "Y arithmetically cohen-macaulay: " << yes_no(kr.acm) << "\n";
    c.text << "I_Y: " << kr.i_y.size() << " generators\n";
    c.text << "I_S (determinantal witness): " << kr.i_s.size() << " generators\n";
    cert_text(c.text, kr.cert);
    c.json["command"] = "kleiman";
    c.json["twists"] = kr.twists;
    c.json["retries_used"] = kr.retries_used;
    c.json["deg_y"] = kr.deg_y;
    c.json["acm"] = kr.acm;
    c.json["i_y"] = poly_strings(kr.i_y);
    c.json["i_s"] = poly_strings(kr.i_s);
    c.json["cert"] = cert_json(kr.cert);
    if (c.flags.verify) {
        KleimanResult again = kleiman_locus(g, twists, c.flags.seed, c.flags.retries);
        ensure(poly_strings(again.i_y) == poly_strings(kr.i_y) &&
                   poly_strings(again.i_s) == poly_strings(kr.i_s),
               "rerun with the same seed produced a different locus");
        c.verify_notes.push_back("rerun with the same seed reproduces the locus");
    }
}

using Handler = void (*)(Ctx&);

const std::map<std::string, Handler>& commands() {
    static const std::map<std::string, Handler> table = {
        {"gb", cmd_gb},         {"resolve", cmd_resolve}, {"betti", cmd_betti},
        {"acm", cmd_acm},       {"mf", cmd_mf},           {"split", cmd_split},
        {"h0", cmd_h0},         {"hilbert", cmd_hilbert}, {"c2", cmd_c2},
        {"report", cmd_report}, {"voisin", cmd_voisin},   {"linspace", cmd_linspace},
        {"kleiman", cmd_kleiman},
    };
    return table;
}

}  // namespace

Flags flags_from_json(const std::string& flags_json) {
    Flags f;
    if (flags_json.empty()) return f;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(flags_json);
    } catch (const std::exception& e) {
        throw ParseError(std::string("flags: ") + e.what());
    }
    require(j.is_object(), "flags: expected a JSON object");
    for (const auto& [k, v] : j.items()) {
        if (k == "seed") {
            require(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
                    "flags: seed must be a nonnegative integer");
            f.seed = v.get<std::uint64_t>();
        } else if (k == "max_length") {
            require(v.is_number_integer(), "flags: max_length must be an integer");
            f.max_length = v.get<int>();
        } else if (k == "retries") {
            require(v.is_number_integer(), "flags: retries must be an integer");
            f.retries = v.get<int>();
        } else if (k == "verify") {
            require(v.is_boolean(), "flags: verify must be a boolean");
            f.verify = v.get<bool>();
        } else if (k == "d") {
            require(v.is_number_integer(), "flags: d must be an integer");
            f.d = v.get<int>();
        } else if (k == "nu") {
            require(v.is_number_integer(), "flags: nu must be an integer");
            f.nu = v.get<int>();
        } else {
            throw PreconditionError("flags: unknown key '" + k + "'");
        }
    }
    require(f.max_length >= 1, "flags: max_length must be >= 1");
    require(f.retries >= 0, "flags: retries must be >= 0");
    return f;
}

RunResult run_command(const std::string& command, const std::string& job_text,
                      const Flags& flags) {
    RunResult out;
    try {
        auto it = commands().find(command);
        require(it != commands().end(), "unknown command '" + command + "'");
        Ctx ctx{parse_job(job_text), flags, {}, ordered_json::object(), {}};
        it->second(ctx);
        for (const auto& n : ctx.verify_notes) ctx.text << "verify: " << n << ": ok\n";
        out.text = ctx.text.str();
        out.json = ctx.json.dump(2) + "\n";
        out.status = Status::ok;
    } catch (const ForgeError& e) {
        out.status = e.status();
        out.error = e.what();
    } catch (const std::exception& e) {
        out.status = Status::invariant;
        out.error = std::string("invariant violation: unexpected error: ") + e.what();
    }
    return out;
}

}  // namespace acmforge
