#pragma once

#include <string>
#include <variant>
#include <vector>

#include "holevo/channel.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/oscillator.hpp"

// JSON problem files.  Schema (version "1"):
//   { "schema_version": "1", "kind": "ensemble" | "channel" | "energy",
//     "payload": { ... } }
// ensemble payload: { dim, probs: [..],
//                     states: [ {"ket": [[re,im],..]} | {"matrix": [[[re,im],..],..]} ] }
// channel payload:  { family: "depolarizing"|"erasure", params: {d, p} }
//                 | { family: "mixing", params: {p, sigma: [[[re,im],..],..]} }
//                 | { family: "cq", params: {outputs: [matrix,..]} }
//                 | { family: "cq-shifted-uniform"|"cq-projector", params: {d, r} }
//                 | { kraus: [matrix,..] }
// energy payload:   { modes, hbar_omega: [..], epsilon, avg_energy, sigma_energy }

namespace holevo {

struct EnsembleProblem {
    DiscreteEnsemble ensemble;
};

struct ChannelProblem {
    QuantumChannel channel;
};

struct EnergyProblem {
    OscillatorSpec spec;
    double epsilon = 0.0;
    double avg_energy = 0.0;
    double sigma_energy = 0.0;
};

struct ProblemFile {
    std::string schema_version;
    std::string kind;
    std::variant<EnsembleProblem, ChannelProblem, EnergyProblem> payload;
    std::vector<std::string> warnings;  // e.g. probability renormalization

    const EnsembleProblem& ensemble() const;  // throw ValidationError on kind mismatch
    const ChannelProblem& channel() const;
    const EnergyProblem& energy() const;
};

ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_text(const std::string& text,
                               const std::string& origin = "<memory>");

}  // namespace holevo
