#include "ertbp/serialization.hpp"

#include <cstdio>
#include <fstream>

namespace ertbp {

Json context_json(const LibrationContext& ctx) {
    Json j;
    j["mu"] = ctx.mu;
    j["point"] = to_string(ctx.point);
    j["gamma"] = ctx.gamma;
    Json cs = Json::array();
    for (int n = 2; n <= ctx.n_poly_max(); ++n) cs.push_back(ctx.cn(n));
    j["c_first_index"] = 2;
    j["c"] = cs;
    j["omega0"] = ctx.omega0;
    j["nu0"] = ctx.nu0;
    j["lambda0"] = ctx.lambda0;
    j["kappa1"] = ctx.kappa1;
    j["kappa2"] = ctx.kappa2;
    return j;
}

namespace {

void dump_trig(Json& records, const char* coord, const TrigSeries& s) {
    const char* parity = (s.parity() == Parity::Cos) ? "cos" : "sin";
    for (const auto& [key, c] : s.terms()) {
        for (int d = 0; d <= c.degree(); ++d) {
            Complex v = c.coeff(d);
            if (std::abs(v) <= kZeroPurge) continue;
            Json rec;
            rec["coord"] = coord;
            rec["i"] = key.amp.i;
            rec["j"] = key.amp.j;
            rec["k"] = key.amp.k;
            rec["m"] = key.amp.m;
            rec["s"] = key.ang.s;
            rec["t"] = key.ang.t;
            rec["u"] = key.ang.u;
            rec["r"] = key.ang.r;
            rec["parity"] = parity;
            rec["eta_deg"] = d;
            rec["re"] = v.real();
            rec["im"] = v.imag();
            records.push_back(rec);
        }
    }
}

void dump_freq(Json& records, const char* coord, const FreqSeries& s) {
    for (const auto& [key, c] : s.terms()) {
        for (int d = 0; d <= c.degree(); ++d) {
            Complex v = c.coeff(d);
            if (std::abs(v) <= kZeroPurge) continue;
            Json rec;
            rec["coord"] = coord;
            rec["i"] = key.i;
            rec["j"] = key.j;
            rec["k"] = key.k;
            rec["m"] = key.m;
            rec["s"] = 0;
            rec["t"] = 0;
            rec["u"] = 0;
            rec["r"] = 0;
            rec["parity"] = "cos";
            rec["eta_deg"] = d;
            rec["re"] = v.real();
            rec["im"] = v.imag();
            records.push_back(rec);
        }
    }
}

}  // namespace

Json solution_json(const SolutionSet& sol) {
    Json j;
    Json header;
    header["mu"] = sol.ctx.mu;
    header["point"] = to_string(sol.ctx.point);
    header["case"] = to_string(sol.kase);
    header["order"] = sol.order;
    header["eta_mode"] = (sol.mode == EtaMode::Symbolic) ? "symbolic" : "numeric";
    header["eta_degree"] = sol.trunc().eta_degree;
    header["eta_value"] = sol.eta_value;
    header["n_poly_max"] = sol.ctx.n_poly_max();
    Json constants;
    constants["gamma"] = sol.ctx.gamma;
    constants["c2"] = sol.ctx.c2();
    constants["omega0"] = sol.ctx.omega0;
    constants["nu0"] = sol.ctx.nu0;
    constants["lambda0"] = sol.ctx.lambda0;
    constants["kappa1"] = sol.ctx.kappa1;
    constants["kappa2"] = sol.ctx.kappa2;
    constants["kappa3"] = sol.coupling.kappa3;
    constants["d0000"] = sol.coupling.d0000;
    header["constants"] = constants;
    j["header"] = header;

    Json records = Json::array();
    dump_trig(records, "x", sol.x);
    dump_trig(records, "y", sol.y);
    dump_trig(records, "z", sol.z);
    dump_freq(records, "omega", sol.omega);
    dump_freq(records, "nu", sol.nu);
    dump_freq(records, "lambda", sol.lambda);
    dump_freq(records, "delta", sol.delta);
    j["terms"] = records;
    return j;
}

SolutionSet solution_from_json(const Json& j) {
    const Json& h = j.at("header");
    SolutionSet sol;
    sol.kase = case_from_string(h.at("case").get<std::string>());
    sol.order = h.at("order").get<int>();
    sol.mode = (h.at("eta_mode").get<std::string>() == "symbolic") ? EtaMode::Symbolic
                                                                   : EtaMode::Numeric;
    sol.eta_value = h.at("eta_value").get<double>();
    sol.ctx = make_context(h.at("mu").get<double>(),
                           point_from_string(h.at("point").get<std::string>()),
                           h.at("n_poly_max").get<int>());
    sol.coupling = coupling_constants(sol.ctx, sol.kase);

    SeriesTrunc tr{sol.order, h.at("eta_degree").get<int>()};
    Parity zpar = (sol.kase == CouplingCase::XtoZ) ? Parity::Cos : Parity::Sin;
    sol.x = TrigSeries(Parity::Cos, tr);
    sol.y = TrigSeries(Parity::Sin, tr);
    sol.z = TrigSeries(zpar, tr);
    sol.omega = FreqSeries(tr);
    sol.nu = FreqSeries(tr);
    sol.lambda = FreqSeries(tr);
    sol.delta = FreqSeries(tr);

    for (const Json& rec : j.at("terms")) {
        std::string coord = rec.at("coord").get<std::string>();
        AmpKey amp{rec.at("i").get<std::uint8_t>(), rec.at("j").get<std::uint8_t>(),
                   rec.at("k").get<std::uint8_t>(), rec.at("m").get<std::uint8_t>()};
        AngleKey ang{rec.at("s").get<std::int8_t>(), rec.at("t").get<std::int8_t>(),
                     rec.at("u").get<std::int8_t>(), rec.at("r").get<std::int8_t>()};
        EtaPoly c(Complex(rec.at("re").get<double>(), rec.at("im").get<double>()),
                  rec.at("eta_deg").get<int>());
        if (coord == "x") sol.x.add_term(amp, ang, c);
        else if (coord == "y") sol.y.add_term(amp, ang, c);
        else if (coord == "z") sol.z.add_term(amp, ang, c);
        else if (coord == "omega") sol.omega.add_term(amp, c);
        else if (coord == "nu") sol.nu.add_term(amp, c);
        else if (coord == "lambda") sol.lambda.add_term(amp, c);
        else if (coord == "delta") sol.delta.add_term(amp, c);
        else throw DomainError("unknown coordinate in solution file: " + coord);
    }
    return sol;
}

Json bifurcation_form_json(const BifurcationForm& form) {
    Json j;
    j["case"] = to_string(form.kase);
    j["const_term"] = form.const_term;
    if (form.kase == CouplingCase::ZtoY) {
        for (int i = 1; i <= 5; ++i) j["h" + std::to_string(i)] = form.h(i);
    } else {
        const char* name = (form.kase == CouplingCase::XtoZ) ? "l" : "k";
        for (int i = 1; i <= 9; ++i) j[name + std::to_string(i)] = form.l(i);
    }
    return j;
}

namespace {

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string trajectory_csv(const std::vector<StateVector>& traj) {
    std::string out = "f,x,y,z,xp,yp,zp\n";
    for (const StateVector& s : traj) {
        out += fmt10(s.f);
        out += ',';
        out += fmt10(s.x);
        out += ',';
        out += fmt10(s.y);
        out += ',';
        out += fmt10(s.z);
        out += ',';
        out += fmt10(s.xp);
        out += ',';
        out += fmt10(s.yp);
        out += ',';
        out += fmt10(s.zp);
        out += '\n';
    }
    return out;
}

std::string mesh_csv(const SurfaceMesh& mesh) {
    std::string out = "alpha1,alpha2,alpha3,surface_id,branch\n";
    const std::string id = to_string(mesh.kind);
    const std::string branch = to_string(mesh.branch);
    for (const SurfacePoint& pt : mesh.points) {
        out += fmt10(pt.alpha1);
        out += ',';
        out += fmt10(pt.alpha2);
        out += ',';
        out += fmt10(pt.alpha3);
        out += ',';
        out += id;
        out += ',';
        out += branch;
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + path);
    f << content;
}

}  // namespace ertbp
