#include "holevo/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "holevo/errors.hpp"

namespace holevo {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
    throw ValidationError(where + ": " + msg);
}

const json& field(const json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
    return *it;
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

std::size_t count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) fail(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

cplx complex_entry(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(where, "complex entries are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> parse_ket(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of [re, im] pairs");
    std::vector<cplx> v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(complex_entry(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) fail(where, "rows must be nonempty arrays");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols) fail(rw, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = complex_entry(j[r][c], rw + "[" + std::to_string(c) + "]");
    }
    return m;
}

EnsembleProblem parse_ensemble(const json& p, std::vector<std::string>& warnings) {
    const std::string where = "payload";
    const std::size_t dim = count(field(p, "dim", where), where + ".dim");
    if (dim == 0) fail(where + ".dim", "dimension must be positive");

    const json& jp = field(p, "probs", where);
    if (!jp.is_array() || jp.empty()) fail(where + ".probs", "expected a nonempty array");
    std::vector<double> probs;
    probs.reserve(jp.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < jp.size(); ++i) {
        const double v = number(jp[i], where + ".probs[" + std::to_string(i) + "]");
        if (v < 0.0) fail(where + ".probs[" + std::to_string(i) + "]", "negative probability");
        probs.push_back(v);
        sum += v;
    }
    const double off = std::abs(sum - 1.0);
    if (off > 1e-3)
        fail(where + ".probs",
             "probabilities sum to " + std::to_string(sum) + ", too far from 1");
    if (off > 1e-6)
        warnings.push_back("probabilities summed to " + std::to_string(sum) +
                           "; renormalized");
    if (sum > 0.0)
        for (double& v : probs) v /= sum;

    const json& js = field(p, "states", where);
    if (!js.is_array() || js.size() != probs.size())
        fail(where + ".states", "expected one state per probability");
    std::vector<DensityMatrix> states;
    states.reserve(js.size());
    for (std::size_t i = 0; i < js.size(); ++i) {
        const std::string sw = where + ".states[" + std::to_string(i) + "]";
        const json& st = js[i];
        if (!st.is_object()) fail(sw, "expected an object with 'ket' or 'matrix'");
        try {
            if (st.contains("ket")) {
                auto ket = parse_ket(st["ket"], sw + ".ket");
                if (ket.size() != dim) fail(sw + ".ket", "length does not match dim");
                states.push_back(make_pure_state(ket));
            } else if (st.contains("matrix")) {
                Matrix m = parse_matrix(st["matrix"], sw + ".matrix");
                if (m.rows != dim || m.cols != dim)
                    fail(sw + ".matrix", "shape does not match dim");
                states.push_back(DensityMatrix::validated(HermitianMatrix::checked(m)));
            } else {
                fail(sw, "expected an object with 'ket' or 'matrix'");
            }
        } catch (const ValidationError& e) {
            fail(sw, e.what());
        }
    }
    return {DiscreteEnsemble::checked(std::move(probs), std::move(states))};
}

ChannelProblem parse_channel(const json& p) {
    const std::string where = "payload";
    if (p.contains("kraus")) {
        const json& jk = p["kraus"];
        if (!jk.is_array() || jk.empty()) fail(where + ".kraus", "expected operator list");
        std::vector<Matrix> ops;
        ops.reserve(jk.size());
        for (std::size_t i = 0; i < jk.size(); ++i)
            ops.push_back(parse_matrix(jk[i], where + ".kraus[" + std::to_string(i) + "]"));
        return {QuantumChannel::from_kraus(std::move(ops))};
    }

    const std::string fam = field(p, "family", where).get<std::string>();
    const json& prm = field(p, "params", where);
    const std::string pw = where + ".params";
    if (fam == "depolarizing" || fam == "erasure") {
        const std::size_t d = count(field(prm, "d", pw), pw + ".d");
        const double prob = number(field(prm, "p", pw), pw + ".p");
        return {fam == "depolarizing" ? make_depolarizing(d, prob) : make_erasure(d, prob)};
    }
    if (fam == "mixing") {
        const double prob = number(field(prm, "p", pw), pw + ".p");
        Matrix m = parse_matrix(field(prm, "sigma", pw), pw + ".sigma");
        return {make_mixing(DensityMatrix::validated(HermitianMatrix::checked(m)), prob)};
    }
    if (fam == "cq") {
        const json& jo = field(prm, "outputs", pw);
        if (!jo.is_array() || jo.empty()) fail(pw + ".outputs", "expected state list");
        std::vector<DensityMatrix> outs;
        for (std::size_t i = 0; i < jo.size(); ++i) {
            Matrix m = parse_matrix(jo[i], pw + ".outputs[" + std::to_string(i) + "]");
            outs.push_back(DensityMatrix::validated(HermitianMatrix::checked(m)));
        }
        return {make_cq(std::move(outs))};
    }
    if (fam == "cq-shifted-uniform" || fam == "cq-projector") {
        CqSpectrumCase c;
        c.shape = fam == "cq-shifted-uniform" ? CqSpectrumCase::Shape::shifted_uniform
                                              : CqSpectrumCase::Shape::projector;
        c.d = count(field(prm, "d", pw), pw + ".d");
        c.r = count(field(prm, "r", pw), pw + ".r");
        return {make_example_cq(c)};
    }
    fail(where + ".family", "unknown channel family '" + fam + "'");
}

EnergyProblem parse_energy(const json& p) {
    const std::string where = "payload";
    const std::size_t modes = count(field(p, "modes", where), where + ".modes");
    const json& jw = field(p, "hbar_omega", where);
    if (!jw.is_array()) fail(where + ".hbar_omega", "expected an array");
    std::vector<double> freqs;
    for (std::size_t i = 0; i < jw.size(); ++i)
        freqs.push_back(number(jw[i], where + ".hbar_omega[" + std::to_string(i) + "]"));

    EnergyProblem out{OscillatorSpec::checked(modes, std::move(freqs)), 0.0, 0.0, 0.0};
    out.epsilon = number(field(p, "epsilon", where), where + ".epsilon");
    out.avg_energy = number(field(p, "avg_energy", where), where + ".avg_energy");
    out.sigma_energy = number(field(p, "sigma_energy", where), where + ".sigma_energy");
    if (!(out.epsilon >= 0.0 && out.epsilon <= 1.0))
        fail(where + ".epsilon", "must lie in [0,1]");
    if (!(out.avg_energy > 0.0) || !(out.sigma_energy > 0.0))
        fail(where, "energies must be positive");
    return out;
}

}  // namespace

const EnsembleProblem& ProblemFile::ensemble() const {
    if (const auto* e = std::get_if<EnsembleProblem>(&payload)) return *e;
    throw ValidationError("this command needs an ensemble problem, got kind '" + kind + "'");
}

const ChannelProblem& ProblemFile::channel() const {
    if (const auto* c = std::get_if<ChannelProblem>(&payload)) return *c;
    throw ValidationError("this command needs a channel problem, got kind '" + kind + "'");
}

const EnergyProblem& ProblemFile::energy() const {
    if (const auto* e = std::get_if<EnergyProblem>(&payload)) return *e;
    throw ValidationError("this command needs an energy problem, got kind '" + kind + "'");
}

ProblemFile parse_problem_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    if (!j.is_object()) throw ValidationError(origin + ": top level must be an object");

    ProblemFile out;
    try {
        out.schema_version = field(j, "schema_version", "<top>").get<std::string>();
        if (out.schema_version != "1")
            fail("schema_version", "unrecognized version '" + out.schema_version + "'");
        out.kind = field(j, "kind", "<top>").get<std::string>();
        const json& p = field(j, "payload", "<top>");
        if (out.kind == "ensemble")
            out.payload = parse_ensemble(p, out.warnings);
        else if (out.kind == "channel")
            out.payload = parse_channel(p);
        else if (out.kind == "energy")
            out.payload = parse_energy(p);
        else
            fail("kind", "expected one of ensemble, channel, energy");
    } catch (const json::exception& e) {
        throw ValidationError(origin + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    return out;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str(), path);
}

}  // namespace holevo
