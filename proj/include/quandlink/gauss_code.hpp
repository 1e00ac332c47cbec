#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quandlink {

enum class Role : std::uint8_t { Over, Under };

struct Passage {
    int crossing = 0;
    Role role = Role::Over;
    int sign = +1;

    bool operator==(const Passage&) const = default;
};

// An oriented virtual link diagram as a signed Gauss code: one cyclic
// passage sequence per component. Virtual crossings never appear. Every
// instance is validated: each crossing id occurs exactly twice, once Over
// and once Under, with equal signs.
class SignedGaussCode {
public:
    SignedGaussCode() = default;
    explicit SignedGaussCode(std::vector<std::vector<Passage>> components);

    // Grammar: one line per component; tokens ('O'|'U') digits ('+'|'-')
    // separated by whitespace; a blank line is a crossing-free component;
    // '#' starts a comment (a line holding only a comment is skipped).
    static SignedGaussCode parse(std::string_view text);

    std::string serialize() const;

    int component_count() const { return static_cast<int>(components_.size()); }
    int crossing_count() const;
    int interlinked_crossing_count() const; // over and under passages on distinct components
    int max_crossing_id() const;

    const std::vector<std::vector<Passage>>& components() const { return components_; }

    bool operator==(const SignedGaussCode&) const = default;

private:
    std::vector<std::vector<Passage>> components_;
};

struct CrossingRecord {
    int id = 0;
    int sign = +1;
    int over_component = 0;  // 1-based
    int under_component = 0;
    int over_arc = 0;        // global 1-based arc ids
    int under_in_arc = 0;
    int under_out_arc = 0;
};

// Arcs are maximal passage runs between consecutive Under passages of a
// component (cyclically); an Under-free component is a single arc. Ids are
// global, assigned component by component; within a component the first id
// goes to the arc beginning at the component's first Under passage.
class ArcTable {
public:
    struct PassageArcs {
        int incoming = 0;
        int outgoing = 0; // equal to incoming at an Over passage
    };

    int arc_count() const { return arc_count_; }
    int component_count() const { return static_cast<int>(comp_arcs_.size()); }
    int component_of_arc(int arc) const { return arc_component_[arc]; }
    const std::vector<int>& arcs_of_component(int comp) const { return comp_arcs_[comp - 1]; }
    PassageArcs passage_arcs(int comp, int pos) const { return passage_[comp - 1][pos]; }
    const std::vector<CrossingRecord>& crossings() const { return crossings_; } // ordered by id

private:
    friend ArcTable arcs(const SignedGaussCode&);

    int arc_count_ = 0;
    std::vector<std::vector<int>> comp_arcs_;
    std::vector<int> arc_component_;
    std::vector<std::vector<PassageArcs>> passage_;
    std::vector<CrossingRecord> crossings_;
};

ArcTable arcs(const SignedGaussCode& code);

} // namespace quandlink
