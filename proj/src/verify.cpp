#include "pgr/verify.hpp"

#include <sstream>

namespace pgr {

namespace {

const char* mode_name(CheckMode::Kind kind) {
    return kind == CheckMode::Kind::exhaustive ? "exhaustive" : "sampled";
}

}  // namespace

std::string AxiomReport::to_text() const {
    std::ostringstream out;
    out << "structure=" << structure << " axiom=" << axiom << " mode=" << mode_name(mode);
    if (mode == CheckMode::Kind::sampled) out << " seed=" << seed;
    out << " cases=" << cases << " status=" << (holds() ? "holds" : "fails");
    if (!note.empty()) out << " note=\"" << note << "\"";
    if (counterexample) {
        out << " counterexample=[";
        for (std::size_t i = 0; i < counterexample->word.size(); ++i) {
            if (i > 0) out << ", ";
            out << counterexample->word[i];
        }
        out << "] lhs=" << counterexample->lhs << " rhs=" << counterexample->rhs << " detail=\""
            << counterexample->detail << "\"";
    }
    return out.str();
}

nlohmann::json AxiomReport::to_json() const {
    nlohmann::json j;
    j["structure"] = structure;
    j["axiom"] = axiom;
    j["mode"] = mode_name(mode);
    j["seed"] = mode == CheckMode::Kind::sampled ? nlohmann::json(seed) : nlohmann::json(nullptr);
    j["cases"] = cases;
    j["status"] = holds() ? "holds" : "fails";
    if (!note.empty()) j["note"] = note;
    if (counterexample) {
        j["counterexample"] = {{"word", counterexample->word},
                               {"lhs", counterexample->lhs},
                               {"rhs", counterexample->rhs},
                               {"detail", counterexample->detail}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

}  // namespace pgr
