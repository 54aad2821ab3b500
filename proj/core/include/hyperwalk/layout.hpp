#pragma once

#include <string>
#include <vector>

namespace hyperwalk {

/// Hardware realization of the per-step polarization plates.
///   JPlate:         one programmable conversion plate per beam
///   QPlateModified: q-plates alone (mode-swapping OAM shift)
///   QPlatePauli:    q-plates each paired with a half-wave plate
enum class Realization { JPlate, QPlateModified, QPlatePauli };

struct ComponentCounts {
    long long pbs = 0;
    long long jplates = 0;
    long long hwps = 0;
};

enum class ElementKind { Pbs, JPlate, QPlate, Hwp, DetectorUnit };

/// One element of the planar layout. step_index 0 is the source side of the
/// first splitter row; rows 1..steps hold the splitters; detectors sit at
/// step_index steps + 1. Detector units carry the three stage flags
/// (spatial light modulator, single-mode fiber, single-photon detector).
struct LayoutElement {
    ElementKind kind = ElementKind::Pbs;
    int step_index = 0;
    int position_index = 0;
    bool slm = false;
    bool smf = false;
    bool spd = false;
};

struct OpticalLayout {
    int steps = 0;
    Realization realization = Realization::JPlate;
    ComponentCounts counts;
    std::vector<LayoutElement> elements;
};

/// Component budget for an n-step realization: n(n+1)/2 splitters and
/// n(n-1)+1 plates (one per input or splitter output beam); the q-plate
/// Pauli realization adds one half-wave plate per plate. Throws
/// std::invalid_argument for steps < 1.
ComponentCounts component_counts(int steps, Realization realization);

/// Full triangular layout: splitter row k holds k splitters at positions
/// -(k-1), -(k-3), ..., (k-1); every splitter output beam passes one plate
/// before the next row; detectors span the reachable final positions
/// -steps..steps. Element totals match component_counts exactly.
OpticalLayout emit_layout(int steps, Realization realization);

/// Machine-readable JSON rendering of a layout.
std::string layout_json(const OpticalLayout& layout);

/// Graphviz DOT rendering (beam graph) for visual inspection.
std::string layout_dot(const OpticalLayout& layout);

/// Round-trip helpers for the realization token used by JSON and the CLI:
/// "jplate", "qplate-modified", "qplate-pauli".
std::string realization_name(Realization realization);
Realization realization_from_name(const std::string& name);

}  // namespace hyperwalk
