#include "hyperwalk/layout.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace hyperwalk {

namespace {

ElementKind plate_kind(Realization realization) {
    return realization == Realization::JPlate ? ElementKind::JPlate
                                              : ElementKind::QPlate;
}

std::string kind_name(ElementKind kind) {
    switch (kind) {
        case ElementKind::Pbs:
            return "PBS";
        case ElementKind::JPlate:
            return "JPlate";
        case ElementKind::QPlate:
            return "QPlate";
        case ElementKind::Hwp:
            return "HWP";
        case ElementKind::DetectorUnit:
            return "DetectorUnit";
    }
    throw std::invalid_argument("unknown element kind");
}

// DOT node identifier for a position (positions can be negative).
std::string pos_token(int position) {
    return position < 0 ? "n" + std::to_string(-position)
                        : std::to_string(position);
}

}  // namespace

ComponentCounts component_counts(int steps, Realization realization) {
    if (steps < 1) {
        throw std::invalid_argument("layout needs at least one step");
    }
    const long long n = steps;
    ComponentCounts counts;
    counts.pbs = n * (n + 1) / 2;
    counts.jplates = n * (n - 1) + 1;
    counts.hwps = realization == Realization::QPlatePauli ? counts.jplates : 0;
    return counts;
}

OpticalLayout emit_layout(int steps, Realization realization) {
    OpticalLayout layout;
    layout.steps = steps;
    layout.realization = realization;
    layout.counts = component_counts(steps, realization);

    const ElementKind plate = plate_kind(realization);
    const bool with_hwp = realization == Realization::QPlatePauli;

    auto add_plate = [&](int step_index, int position) {
        layout.elements.push_back({plate, step_index, position});
        if (with_hwp) {
            layout.elements.push_back({ElementKind::Hwp, step_index, position});
        }
    };

    // Single plate on the input beam, then alternating plate and splitter
    // rows. Splitter row k-1 emits beams at p-1 (H) and p+1 (V) for each of
    // its positions p; each beam gets its own plate before row k.
    add_plate(0, 0);
    for (int k = 1; k <= steps; ++k) {
        if (k >= 2) {
            for (int p = -(k - 2); p <= k - 2; p += 2) {
                add_plate(k, p - 1);
                add_plate(k, p + 1);
            }
        }
        for (int p = -(k - 1); p <= k - 1; p += 2) {
            layout.elements.push_back({ElementKind::Pbs, k, p});
        }
    }
    for (int p = -steps; p <= steps; p += 2) {
        layout.elements.push_back(
            {ElementKind::DetectorUnit, steps + 1, p, true, true, true});
    }
    return layout;
}

std::string layout_json(const OpticalLayout& layout) {
    nlohmann::ordered_json j;
    j["steps"] = layout.steps;
    j["realization"] = realization_name(layout.realization);
    j["counts"] = {{"pbs", layout.counts.pbs},
                   {"jplates", layout.counts.jplates},
                   {"hwps", layout.counts.hwps}};
    j["elements"] = nlohmann::ordered_json::array();
    for (const auto& element : layout.elements) {
        nlohmann::ordered_json e;
        e["kind"] = kind_name(element.kind);
        e["step_index"] = element.step_index;
        e["position_index"] = element.position_index;
        if (element.kind == ElementKind::DetectorUnit) {
            e["slm"] = element.slm;
            e["smf"] = element.smf;
            e["spd"] = element.spd;
        }
        j["elements"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string layout_dot(const OpticalLayout& layout) {
    const int steps = layout.steps;
    const bool with_hwp = layout.realization == Realization::QPlatePauli;
    const std::string plate_label =
        layout.realization == Realization::JPlate ? "J" : "Q";

    std::ostringstream out;
    out << "digraph layout {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";

    // Plate chain on one beam: emits the plate (and half-wave plate) nodes
    // and the edges from `from` through the chain, returning the last node.
    auto chain = [&](const std::string& from, const std::string& id_suffix,
                     int step_index) {
        std::string plate_id = "plate_" + id_suffix;
        out << "  " << plate_id << " [label=\"" << plate_label << " (step "
            << step_index << ")\"];\n";
        out << "  " << from << " -> " << plate_id << ";\n";
        if (!with_hwp) {
            return plate_id;
        }
        std::string hwp_id = "hwp_" + id_suffix;
        out << "  " << hwp_id << " [label=\"HWP (step " << step_index
            << ")\"];\n";
        out << "  " << plate_id << " -> " << hwp_id << ";\n";
        return hwp_id;
    };

    out << "  source [label=\"input\", shape=ellipse];\n";
    const std::string input_end = chain("source", "in", 0);
    out << "  pbs_1_0 [label=\"PBS (step 1, pos 0)\"];\n";
    out << "  " << input_end << " -> pbs_1_0;\n";

    for (int k = 2; k <= steps; ++k) {
        for (int p = -(k - 1); p <= k - 1; p += 2) {
            out << "  pbs_" << k << "_" << pos_token(p) << " [label=\"PBS (step "
                << k << ", pos " << p << ")\"];\n";
        }
        for (int p = -(k - 2); p <= k - 2; p += 2) {
            const std::string src = "pbs_" + std::to_string(k - 1) + "_" +
                                    pos_token(p);
            const std::string base =
                std::to_string(k) + "_" + pos_token(p) + "_";
            const std::string h_end = chain(src, base + "H", k);
            out << "  " << h_end << " -> pbs_" << k << "_" << pos_token(p - 1)
                << ";\n";
            const std::string v_end = chain(src, base + "V", k);
            out << "  " << v_end << " -> pbs_" << k << "_" << pos_token(p + 1)
                << ";\n";
        }
    }

    for (int p = -steps; p <= steps; p += 2) {
        out << "  det_" << pos_token(p)
            << " [label=\"SLM+SMF+SPD (pos " << p << ")\", shape=ellipse];\n";
    }
    for (int p = -(steps - 1); p <= steps - 1; p += 2) {
        const std::string src =
            "pbs_" + std::to_string(steps) + "_" + pos_token(p);
        out << "  " << src << " -> det_" << pos_token(p - 1) << ";\n";
        out << "  " << src << " -> det_" << pos_token(p + 1) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string realization_name(Realization realization) {
    switch (realization) {
        case Realization::JPlate:
            return "jplate";
        case Realization::QPlateModified:
            return "qplate-modified";
        case Realization::QPlatePauli:
            return "qplate-pauli";
    }
    throw std::invalid_argument("unknown realization");
}

Realization realization_from_name(const std::string& name) {
    if (name == "jplate") return Realization::JPlate;
    if (name == "qplate-modified") return Realization::QPlateModified;
    if (name == "qplate-pauli") return Realization::QPlatePauli;
    throw std::invalid_argument("unknown realization: " + name);
}

}  // namespace hyperwalk
