#pragma once

#include <string>
#include <utility>
#include <vector>

#include "birack/errors.hpp"

namespace birack {

// One passage of a strand through a crossing, as read along a component.
struct Token {
    int id = 0;
    bool over = false;
    int sign = 1;  // +1 or -1

    bool operator==(const Token&) const = default;
};

// A crossing with its four incident semiarc ids (0-based, global).
// Conventions for the labeling rules, with B the birack map:
//   positive: (under_out, over_out) = B(over_in, under_in)
//   negative: (under_in,  over_in)  = B(over_out, under_out)
struct Crossing {
    int id = 0;
    int sign = 1;
    int over_in = -1, under_in = -1, over_out = -1, under_out = -1;
};

// An oriented link diagram as a signed Gauss code: one cyclic token
// sequence per component. Virtual crossings are never recorded; they do
// not divide semiarcs. Semiarcs are numbered consecutively: within
// component c, the arc following token t has a fixed id, and a
// crossing-free component contributes a single closed semiarc.
class LinkDiagram {
public:
    explicit LinkDiagram(std::vector<std::vector<Token>> components);

    // Grammar: components separated by ';'; tokens match [OU]<id>[+-],
    // optionally separated by commas or spaces; an empty component is a
    // crossing-free circle.
    static LinkDiagram parse_gauss(const std::string& text);
    std::string to_gauss() const;

    const std::vector<std::vector<Token>>& components() const { return components_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int semiarc_count() const { return semiarc_count_; }
    // Per-component writhe: sum of signs over self-crossings.
    const std::vector<int>& writhe() const { return writhe_; }
    // Component that a semiarc belongs to.
    int semiarc_component(int semiarc) const { return semiarc_component_[semiarc]; }

private:
    std::vector<std::vector<Token>> components_;
    std::vector<Crossing> crossings_;
    std::vector<int> writhe_;
    std::vector<int> semiarc_component_;
    int semiarc_count_ = 0;
};

// Built-in diagrams: unknot, 3_1, 4_1, L2a1, L4a1, v3.7, v4.47.
LinkDiagram catalog(const std::string& name);
std::vector<std::string> catalog_names();

// Insert one kink (Reidemeister I curl) into a component before token
// index `position`. `over_first` selects which passage comes first along
// the strand; both forms carry the same labeling counts.
LinkDiagram insert_kink(const LinkDiagram& L, int component, int position, bool positive,
                        bool over_first = true);

// counts[i] positive kinks at the start of component i.
LinkDiagram add_kinks(const LinkDiagram& L, const std::vector<int>& counts);

// Kinks of the needed sign until each component's writhe equals target[i].
LinkDiagram set_framing(const LinkDiagram& L, const std::vector<int>& target);

// The N^c framed representatives: for writhe vector w (entries mod N),
// component i receives (w_i - writhe_i) mod N positive kinks. Enumerated
// in lexicographic order with the last component fastest.
std::vector<std::pair<std::vector<int>, LinkDiagram>> framing_tile(const LinkDiagram& L, int N);

// Framed-move variants used by invariance tests: R2 pokes, an R2 removal
// where the code contains a removable pair, and a +/- kink pair. All
// variants have the writhe vector of L.
std::vector<LinkDiagram> reidemeister_variants(const LinkDiagram& L);

}  // namespace birack
