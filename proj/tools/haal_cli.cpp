// Command-line front end: each verb parses its inputs, calls one library operation and prints JSON.

#include "haal/dim12.hpp"
#include "haal/errors.hpp"
#include "haal/json_io.hpp"
#include "haal/liegroup.hpp"
#include "haal/linalg.hpp"
#include "haal/nilpotent.hpp"
#include "haal/poly_tools.hpp"
#include "haal/quaternion.hpp"
#include "haal/solvmanifold.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace haal;

namespace {

constexpr const char* kSchema = "haal.v1";

Json with_schema(Json j)
{
    j["schema"] = kSchema;
    return j;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::vector<std::size_t> parse_counts(const std::string& text)
{
    std::vector<std::size_t> out;
    for (const auto& s : split(text, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            throw ParseError(0, "expected a comma-separated list of counts, got '" + text + "'");
        }
        if (used != s.size())
            throw ParseError(used, "expected a count, got '" + s + "'");
        out.push_back(v);
    }
    return out;
}

// "1,-1/2,0" or a JSON array.
RatVector parse_vector(const std::string& text)
{
    if (!text.empty() && text.front() == '[')
        return vector_from_json(parse_json_text(text));
    RatVector v;
    for (const auto& s : split(text, ','))
        v.push_back(parse_rational(s));
    return v;
}

// A real number, optionally as a multiple of pi: "0.5", "2pi", "2pi/3", "-pi/6", "1/3".
double parse_real(const std::string& text)
{
    auto pos = text.find("pi");
    if (pos == std::string::npos) {
        if (text.find('/') != std::string::npos)
            return parse_rational(text).get_d();
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            throw ParseError(0, "expected a real number, got '" + text + "'");
        }
        if (used != text.size())
            throw ParseError(used, "trailing characters in '" + text + "'");
        return v;
    }
    std::string coef = text.substr(0, pos), rest = text.substr(pos + 2);
    double c = coef.empty() || coef == "+" ? 1.0 : coef == "-" ? -1.0 : parse_rational(coef).get_d();
    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/')
            throw ParseError(pos + 2, "expected '/' after pi");
        den = parse_rational(rest.substr(1)).get_d();
    }
    return c * std::numbers::pi / den;
}

StructureKind parse_kind(const std::string& s)
{
    if (s == "hypercomplex")
        return StructureKind::Hypercomplex;
    if (s == "complex")
        return StructureKind::Complex;
    throw ParseError(0, "kind must be hypercomplex or complex");
}

RatMatrix read_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }

Json numeric_json(const MatD& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Json numeric_json(const VecD& v)
{
    Json out = Json::array();
    for (double x : v)
        out.push_back(x);
    return out;
}

Json to_json(const JordanData& jd)
{
    Json parts = Json::array();
    for (auto [n, q] : jd.parts)
        parts.push_back({n, q});
    return Json{{"parts", parts}, {"d", jd.d}};
}

Json to_json(const CanonicalNilpotent& c)
{
    return Json{{"form", c.kind == CanonKind::N ? "N" : "A_ell"},
                {"ell", c.ell},
                {"structure", kind_name(c.structure)},
                {"sigma", haal::to_json(c.sigma)},
                {"n", c.n},
                {"dimension", beta(c.structure) * c.n},
                {"matrix", haal::to_json(c.matrix)},
                {"description", describe(c)}};
}

Json to_json(const SolvmanifoldDescriptor& s)
{
    return Json{{"poly", s.p.str()},
                {"n", s.n},
                {"dimension", s.dimension()},
                {"companion", haal::to_json(s.companion)},
                {"holonomy", haal::to_json(s.holonomy)},
                {"lattice", {{"rank", s.lattice.rank}, {"generator", haal::to_json(s.lattice.E)}}},
                {"xp_numeric", s.xp_numeric}};
}

Json to_json(const BockReport& r)
{
    Json j{{"accepted", r.accepted},
           {"charpoly_match", r.charpoly_ok},
           {"jordan_match", r.jordan_ok},
           {"coefficient_error", r.coeff_error},
           {"diagnostic", r.diagnostic}};
    if (r.conjugator_ok)
        j["conjugator_match"] = *r.conjugator_ok;
    return j;
}

Json to_json(const FamilyLabel& l)
{
    Json params = Json::object();
    for (const auto& [k, v] : l.params)
        params[k] = to_string(v);
    Json flags{{"unimodular", l.flags.unimodular},
               {"completely_solvable", l.flags.completely_solvable},
               {"hkt", l.flags.hkt},
               {"hyper_kahler", l.flags.hyper_kahler},
               {"nilpotent_step", l.flags.nilpotent_step ? Json(*l.flags.nilpotent_step) : Json(nullptr)}};
    Json lattice{{"verdict", lattice_tag_name(l.lattice.tag)}, {"witness", l.lattice.witness}};
    lattice["reason"] = l.lattice.reason ? Json(no_reason_name(*l.lattice.reason)) : Json(nullptr);
    return Json{{"family", l.name()}, {"index", l.family}, {"params", params}, {"flags", flags}, {"lattice", lattice}};
}

struct Cli {
    CLI::App app{"Hypercomplex almost abelian toolkit"};
    std::function<Json()> action;

    // Registers a verb whose action runs after parsing succeeds.
    CLI::App* verb(CLI::App* parent, const std::string& name, const std::string& help, std::function<Json()> f)
    {
        auto* sub = parent->add_subcommand(name, help);
        sub->callback([this, f] { action = f; });
        return sub;
    }
};

}  // namespace

int main(int argc, char** argv)
{
    Cli cli;
    auto& app = cli.app;
    app.require_subcommand(1);

    // state shared by the flag bindings below
    std::string file, kind = "hypercomplex", p_text, q_text, m_text, p_counts, parts_text, v_text, t_text = "0",
                                           e_file, p_file, b_file, mu_text = "0", family;
    std::size_t n = 0, s = 0, ell = 0, d = 0, jobs = 1;
    long k = 1, bound = 20, param = 3;
    double tol = 1e-8, precision = default_precision();
    std::string d12_mu = "0", d12_case = "B1", d12_a = "0", d12_b = "0", d12_c = "0", d12_d = "0", d12_v0 = "zero";
    bool verify = false;

    // quat
    auto* quat = app.add_subcommand("quat", "quaternionic matrices");
    quat->require_subcommand(1);
    cli.verb(quat, "jordan", "quaternionic Jordan form of a J-commuting real matrix or a quaternion matrix", [&] {
             Json in = read_json_file(file);
             RatMatrix b = in.is_object() && in.contains("rows") ? matrix_from_json(in)
                                                                 : sigma_inv(quat_matrix_from_json(in));
             if (!commutes_with_j(b))
                 throw Error(Errc::NotQuaternionLinear, "matrix does not commute with the standard J-triple");
             Json parts = Json::array();
             for (const auto& part : quat_jordan_form(b)) {
                 Json blocks = Json::array();
                 for (auto [size, count] : part.blocks)
                     blocks.push_back({size, count});
                 parts.push_back({{"re", to_string(part.re)}, {"im_squared", to_string(part.im2)}, {"blocks", blocks}});
             }
             Json out{{"quaternionic_size", b.rows() / 4}, {"parts", parts}, {"nilpotent", is_nilpotent(b)}};
             if (is_nilpotent(b))
                 out["sigma"] = to_json(sigma_tuple_from_real(b));
             return out;
         })
        ->add_option("file", file, "JSON matrix file ('-' for stdin)")
        ->required();

    // nilp
    auto* nilp = app.add_subcommand("nilp", "nilpotent hypercomplex / complex almost abelian algebras");
    nilp->require_subcommand(1);
    auto* classify = cli.verb(nilp, "classify", "canonical form isomorphic to the given algebra", [&] {
        Json in = read_json_file(file);
        if (in.is_object() && in.contains("B")) {
            HcxAAData data;
            data.B = matrix_from_json(in["B"]);
            data.n = data.B.rows() / 4 + 1;
            data.mu = in.contains("mu") ? rational_from_json(in["mu"]) : Rational(0);
            data.v0 = in.contains("v0") ? vector_from_json(in["v0"]) : RatVector(data.B.rows());
            return to_json(identify_class(data));
        }
        return to_json(identify_class_matrix(matrix_from_json(in), parse_kind(kind)));
    });
    classify->add_option("file", file, "matrix A, or {\"mu\",\"v0\",\"B\"}")->required();
    classify->add_option("--kind", kind, "hypercomplex|complex")->capture_default_str();

    auto* canon = cli.verb(nilp, "canon", "canonical matrix for a Σ tuple and ℓ", [&] {
        SigmaTuple sig;
        sig.m = parse_counts(m_text);
        sig.p = parse_counts(p_counts);
        sig.r = sig.m.size();
        sig.s = s;
        return to_json(canonical_matrix(sig, ell, parse_kind(kind)));
    });
    canon->add_option("--m", m_text, "block sizes, decreasing, e.g. 2,1");
    canon->add_option("--p", p_counts, "block multiplicities, e.g. 1,1");
    canon->add_option("--s", s, "number of zero blocks")->capture_default_str();
    canon->add_option("--ell", ell, "0 for N, otherwise the insert position")->capture_default_str();
    canon->add_option("--kind", kind, "hypercomplex|complex")->capture_default_str();

    auto* adm = cli.verb(nilp, "admissible", "is this Jordan type realized by a canonical matrix", [&] {
        JordanData jd;
        for (const auto& item : split(parts_text, ',')) {
            auto halves = split(item, ':');
            if (halves.size() != 2)
                throw ParseError(0, "parts are written size:count, e.g. 3:1,2:2");
            auto nq = parse_counts(halves[0] + "," + halves[1]);
            if (nq.size() != 2)
                throw ParseError(0, "parts are written size:count, e.g. 3:1,2:2");
            jd.parts.emplace_back(nq[0], nq[1]);
        }
        jd.d = d;
        AdmissibilityVerdict v = admissible(jd, parse_kind(kind));
        Json out{{"jordan", to_json(jd)}, {"admissible", v.admissible}};
        out["condition"] = v.condition ? Json(condition_name(*v.condition)) : Json(nullptr);
        if (v.condition && *v.condition == AdmissibleCondition::CondIII)
            out["t"] = v.t;
        if (v.witness) {
            out["witness"] = haal::to_json(*v.witness);
            out["witness_sigma"] = haal::to_json(*v.witness_sigma);
            out["witness_ell"] = v.witness_ell;
        }
        return out;
    });
    adm->add_option("--parts", parts_text, "size:count pairs, decreasing sizes ≥ 2, e.g. 3:1,2:2");
    adm->add_option("--d", d, "size of the zero block")->capture_default_str();
    adm->add_option("--kind", kind, "hypercomplex|complex")->capture_default_str();

    auto* count = cli.verb(nilp, "count", "number of isomorphism classes in dimension βn", [&] {
        ClassCount c = count_classes(n, parse_kind(kind));
        Json breakdown = Json::array();
        for (const auto& e : c.breakdown)
            breakdown.push_back(
                {{"sigma", haal::to_json(e.sigma)}, {"classes", e.classes}, {"ells", e.ells}, {"steps", e.steps}});
        return Json{{"n", n}, {"kind", kind}, {"total", c.total}, {"two_step", c.two_step}, {"breakdown", breakdown}};
    });
    count->add_option("--n", n, "quaternionic (or complex) dimension")->required();
    count->add_option("--kind", kind, "hypercomplex|complex")->capture_default_str();

    // dim12
    auto* dim12 = app.add_subcommand("dim12", "twelve-dimensional hypercomplex almost abelian algebras");
    dim12->require_subcommand(1);
    auto* d12 = cli.verb(dim12, "classify", "family, flags and lattice verdict", [&] {
        Dim12Input in;
        in.mu = parse_rational(d12_mu);
        if (d12_case != "B1" && d12_case != "B2")
            throw ParseError(0, "case must be B1 or B2");
        in.bcase = d12_case == "B1" ? BCase::B1 : BCase::B2;
        in.a = parse_rational(d12_a);
        in.b = parse_rational(d12_b);
        in.c = parse_rational(d12_c);
        in.d = parse_rational(d12_d);
        if (d12_v0 == "zero")
            in.v0 = V0Status::Zero;
        else if (d12_v0 == "in-image")
            in.v0 = V0Status::InImage;
        else if (d12_v0 == "not-in-image")
            in.v0 = V0Status::NotInImage;
        else
            throw ParseError(0, "v0 must be zero, in-image or not-in-image");
        return to_json(classify12(in));
    });
    d12->add_option("--mu", d12_mu)->capture_default_str();
    d12->add_option("--case", d12_case, "B1|B2")->capture_default_str();
    d12->add_option("--a", d12_a)->capture_default_str();
    d12->add_option("--b", d12_b)->capture_default_str();
    d12->add_option("--c", d12_c)->capture_default_str();
    d12->add_option("--d", d12_d)->capture_default_str();
    d12->add_option("--v0", d12_v0, "zero|in-image|not-in-image")->capture_default_str();

    // poly
    auto* poly = app.add_subcommand("poly", "integer polynomials and the classes Δ_n");
    poly->require_subcommand(1);
    cli.verb(poly, "delta-check", "membership in Δ_n and Δ_n'", [&] {
           IntPoly p = parse_poly(p_text);
           DeltaVerdict v = delta_check(p);
           Json out{{"poly", p.str()}, {"member", v.member}, {"delta_prime", v.in_delta_prime}};
           out["failed_condition"] = v.failed_condition ? Json(delta_failure_name(*v.failed_condition)) : Json(nullptr);
           return out;
       })
        ->add_option("poly", p_text)
        ->required();
    auto* en = cli.verb(poly, "enumerate", "all members of Δ_n with coefficient magnitudes ≤ bound", [&] {
        if (jobs == 0)
            throw Error(Errc::InvalidParams, "jobs must be positive");
        std::vector<std::future<std::vector<IntPoly>>> parts;
        for (std::size_t j = 0; j < jobs; ++j)
            parts.push_back(std::async(std::launch::async, [=] { return enumerate_delta(n, bound, j, jobs); }));
        std::vector<IntPoly> all;
        for (auto& f : parts)
            for (auto& q : f.get())
                all.push_back(q);
        std::sort(all.begin(), all.end());
        Json polys = Json::array();
        for (const auto& q : all)
            polys.push_back(q.str());
        return Json{{"n", n}, {"bound", bound}, {"count", all.size()}, {"polys", polys}};
    });
    en->add_option("--n", n, "degree")->required();
    en->add_option("--bound", bound, "largest coefficient magnitude")->capture_default_str();
    en->add_option("--jobs", jobs, "parallel shards")->capture_default_str();
    cli.verb(poly, "reciprocal", "p*(x) = (-1)^n x^n p(1/x)", [&] {
           IntPoly p = parse_poly(p_text);
           return Json{{"poly", p.str()}, {"reciprocal", reciprocal(p).str()}};
       })
        ->add_option("poly", p_text)
        ->required();
    auto* pw = cli.verb(poly, "power", "polynomial of the k-th powers of the roots", [&] {
        IntPoly p = parse_poly(p_text);
        return Json{{"poly", p.str()}, {"k", k}, {"power", power_poly(p, k).str()}};
    });
    pw->add_option("poly", p_text)->required();
    pw->add_option("--k", k, "nonzero exponent")->required();
    auto* res = cli.verb(poly, "resultant", "Sylvester resultant", [&] {
        IntPoly p = parse_poly(p_text), q = parse_poly(q_text);
        return Json{{"p", p.str()}, {"q", q.str()}, {"resultant", to_string(resultant(p, q))}};
    });
    res->add_option("p", p_text)->required();
    res->add_option("q", q_text)->required();
    auto* prod = cli.verb(poly, "product", "product of two members without common roots", [&] {
        IntPoly p = parse_poly(p_text), q = parse_poly(q_text);
        auto r = delta_product(p, q);
        return Json{{"p", p.str()},
                    {"q", q.str()},
                    {"common_root", !r.has_value()},
                    {"product", r ? Json(r->str()) : Json(nullptr)}};
    });
    prod->add_option("p", p_text)->required();
    prod->add_option("q", q_text)->required();
    cli.verb(poly, "build-prime", "an explicit member of Δ_n'", [&] {
           IntPoly p = build_delta_prime(n);
           return Json{{"n", n}, {"poly", p.str()}, {"delta_prime", delta_check(p).in_delta_prime}};
       })
        ->add_option("--n", n, "degree ≥ 2")
        ->required();

    // solv
    auto* solv = app.add_subcommand("solv", "solvmanifolds built from members of Δ_n");
    solv->require_subcommand(1);
    auto* sb = cli.verb(solv, "build", "matrices and lattice for p", [&] { return to_json(build_solvmanifold(parse_poly(p_text), precision)); });
    sb->add_option("poly", p_text)->required();
    sb->add_option("--precision", precision, "root isolation precision (default: HAAL_PRECISION or 1e-12)");
    auto* se = cli.verb(solv, "equiv", "diffeomorphism test", [&] {
        IntPoly p = parse_poly(p_text), q = parse_poly(q_text);
        return Json{{"p", p.str()}, {"q", q.str()}, {"diffeomorphic", diffeo_equiv(p, q)}};
    });
    se->add_option("p", p_text)->required();
    se->add_option("q", q_text)->required();
    cli.verb(solv, "split", "split off a 4-torus when p(1) = 0", [&] {
           IntPoly p = parse_poly(p_text);
           auto sp = split_torus_factor(p);
           Json out{{"poly", p.str()}, {"split", sp.has_value()}};
           if (sp) {
               out["ptilde"] = sp->ptilde.str();
               out["torus_dim"] = sp->torus_dim;
           }
           return out;
       })
        ->add_option("poly", p_text)
        ->required();
    auto* sp = cli.verb(solv, "product", "solvmanifold of pq inside the product", [&] {
        ProductEmbedding e = product_embedding(parse_poly(p_text), parse_poly(q_text));
        return Json{{"product", to_json(e.product)},
                    {"sub_dimension", e.sub_dimension},
                    {"ambient_dimension", e.ambient_dimension},
                    {"codimension", e.codimension()}};
    });
    sp->add_option("p", p_text)->required();
    sp->add_option("q", q_text)->required();

    // lattice
    auto* lattice = app.add_subcommand("lattice", "lattice witnesses and obstructions");
    lattice->require_subcommand(1);
    auto* lv = cli.verb(lattice, "verify", "check that e^{t0 A} is conjugate to E", [&] {
        LatticeWitness w;
        w.t0 = parse_real(t_text);
        w.E = read_matrix(e_file);
        if (!p_file.empty())
            w.P = to_eigen(read_matrix(p_file));
        return to_json(bock_verify(read_matrix(file), w, tol));
    });
    lv->add_option("--A", file, "matrix file")->required();
    lv->add_option("--t0", t_text, "real, e.g. 1.5 or 2pi/3")->required();
    lv->add_option("--E", e_file, "integer matrix file")->required();
    lv->add_option("--P", p_file, "optional conjugator file");
    lv->add_option("--tol", tol, "coefficient tolerance")->capture_default_str();
    auto* ln = cli.verb(lattice, "necessary", "μ = 0 and tr B = 0", [&] {
        return Json{{"necessary_conditions_hold", lattice_necessary(parse_rational(mu_text), read_matrix(b_file))}};
    });
    ln->add_option("--mu", mu_text)->capture_default_str();
    ln->add_option("--B", b_file, "matrix file")->required();
    auto* lw = cli.verb(lattice, "witness", "a known witness (s9, s6, s13, s2)", [&] {
        WitnessCase w = family == "s9"    ? witness_s9(param)
                        : family == "s6"  ? witness_s6(param)
                        : family == "s13" ? witness_s13(param)
                        : family == "s2"  ? witness_s2(param)
                                          : throw ParseError(0, "family must be s9, s6, s13 or s2");
        Json out{{"family", w.family},
                 {"instance", w.instance},
                 {"A", numeric_json(w.A)},
                 {"t0", w.witness.t0},
                 {"E", haal::to_json(w.witness.E)}};
        if (verify)
            out["verification"] = to_json(bock_verify(w.A, w.witness, tol));
        return out;
    });
    lw->add_option("--family", family, "s9|s6|s13|s2")->required();
    lw->add_option("--param", param, "m for s9, k otherwise")->capture_default_str();
    lw->add_flag("--verify", verify, "also run the witness verifier");
    lw->add_option("--tol", tol, "coefficient tolerance")->capture_default_str();

    // exp
    auto* ex = cli.verb(&app, "exp", "exponential map (t, v) ↦ (t, Φ(tA) v)", [&] {
        RatMatrix a = read_matrix(file);
        RatVector v = parse_vector(v_text);
        if (v.size() != a.rows())
            throw Error(Errc::DimensionMismatch, "v has the wrong length");
        bool exact_t = t_text.find("pi") == std::string::npos && t_text.find('.') == std::string::npos &&
                       t_text.find('e') == std::string::npos;
        Json out{{"t", parse_real(t_text)}};
        if (exact_t && is_nilpotent(a)) {
            Rational t = parse_rational(t_text);
            RatVector w = phi_matrix_exact(t, a) * v;
            out["v_exact"] = haal::to_json(w);
            VecD wd(static_cast<Eigen::Index>(w.size()));
            for (std::size_t i = 0; i < w.size(); ++i)
                wd(static_cast<Eigen::Index>(i)) = w[i].get_d();
            out["v"] = numeric_json(wd);
        } else {
            out["v"] = numeric_json(exp_group(parse_real(t_text), to_eigen(v), to_eigen(a)).v);
        }
        out["exp_invertible_for_all_t"] = phi_invertible_all_t(a);
        return out;
    });
    ex->add_option("--A", file, "matrix file")->required();
    ex->add_option("--t", t_text, "rational or real")->capture_default_str();
    ex->add_option("--v", v_text, "vector: 1,0,-1/2 or a JSON array")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        std::cout << with_schema(cli.action()).dump(2) << "\n";
        return 0;
    } catch (const ParseError& e) {
        std::cout << with_schema({{"error", {{"kind", "parse"}, {"position", e.position()}, {"message", e.what()}}}}).dump(2)
                  << "\n";
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cout << with_schema({{"error", {{"kind", errc_name(e.code())}, {"message", e.what()}}}}).dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
