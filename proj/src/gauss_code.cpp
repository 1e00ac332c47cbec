#include "quandlink/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "quandlink/errors.hpp"

namespace quandlink {

namespace {

struct Loc {
    int line = 0;
    int column = 0;
};

// Shared by parse() (with source locations) and the validating constructor
// (without). Throws ParseError on any invariant breach.
void validate(const std::vector<std::vector<Passage>>& components,
              const std::vector<std::vector<Loc>>* locs) {
    auto loc_of = [&](int comp, int idx) -> Loc {
        if (!locs) return {};
        return (*locs)[comp][idx];
    };

    std::map<int, std::vector<std::pair<int, int>>> occurrences;
    for (int c = 0; c < static_cast<int>(components.size()); ++c)
        for (int i = 0; i < static_cast<int>(components[c].size()); ++i) {
            const Passage& p = components[c][i];
            if (p.crossing < 1) throw ParseError("crossing id must be >= 1");
            if (p.sign != 1 && p.sign != -1) throw ParseError("crossing sign must be +1 or -1");
            occurrences[p.crossing].push_back({c, i});
        }

    for (const auto& [id, occ] : occurrences) {
        if (occ.size() != 2) {
            auto [c, i] = occ.size() > 2 ? occ[2] : occ[0];
            Loc at = loc_of(c, i);
            throw ParseError("crossing " + std::to_string(id) + " appears " +
                                 std::to_string(occ.size()) + " times (expected exactly 2)",
                             at.line, at.column);
        }
        const Passage& first = components[occ[0].first][occ[0].second];
        const Passage& second = components[occ[1].first][occ[1].second];
        Loc at = loc_of(occ[1].first, occ[1].second);
        if (first.role == second.role)
            throw ParseError("crossing " + std::to_string(id) + " has two '" +
                                 (first.role == Role::Over ? std::string("O") : std::string("U")) +
                                 "' passages (needs one Over and one Under)",
                             at.line, at.column);
        if (first.sign != second.sign)
            throw ParseError("crossing " + std::to_string(id) +
                                 " has mismatched signs on its two passages",
                             at.line, at.column);
    }
}

} // namespace

SignedGaussCode::SignedGaussCode(std::vector<std::vector<Passage>> components)
    : components_(std::move(components)) {
    validate(components_, nullptr);
}

SignedGaussCode SignedGaussCode::parse(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            if (i == text.size() && start == i) break; // no phantom line after a final newline
            std::string_view line = text.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.push_back(line);
            start = i + 1;
        }
    }

    std::vector<std::vector<Passage>> components;
    std::vector<std::vector<Loc>> locs;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        std::string_view line = lines[li];

        std::size_t hash = line.find('#');
        std::string_view body = hash == std::string_view::npos ? line : line.substr(0, hash);
        bool body_blank = body.find_first_not_of(" \t") == std::string_view::npos;
        if (hash != std::string_view::npos && body_blank) continue; // pure comment line

        std::vector<Passage> comp;
        std::vector<Loc> comp_locs;
        std::size_t i = 0;
        while (i < body.size()) {
            if (body[i] == ' ' || body[i] == '\t') {
                ++i;
                continue;
            }
            const int col = static_cast<int>(i) + 1;
            Passage p;
            if (body[i] == 'O')
                p.role = Role::Over;
            else if (body[i] == 'U')
                p.role = Role::Under;
            else
                throw ParseError("expected 'O' or 'U'", line_no, col);
            ++i;

            long long id = 0;
            std::size_t digits = 0;
            while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
                id = id * 10 + (body[i] - '0');
                if (id > 100'000'000) throw ParseError("crossing id too large", line_no, col);
                ++i;
                ++digits;
            }
            if (digits == 0) throw ParseError("expected crossing id digits", line_no, col);
            if (id < 1) throw ParseError("crossing id must be >= 1", line_no, col);
            p.crossing = static_cast<int>(id);

            if (i >= body.size() || (body[i] != '+' && body[i] != '-'))
                throw ParseError("expected sign '+' or '-'", line_no, col);
            p.sign = body[i] == '+' ? +1 : -1;
            ++i;

            if (i < body.size() && body[i] != ' ' && body[i] != '\t')
                throw ParseError("unexpected character after token", line_no,
                                 static_cast<int>(i) + 1);

            comp.push_back(p);
            comp_locs.push_back({line_no, col});
        }
        components.push_back(std::move(comp));
        locs.push_back(std::move(comp_locs));
    }

    validate(components, &locs);
    SignedGaussCode code;
    code.components_ = std::move(components);
    return code;
}

std::string SignedGaussCode::serialize() const {
    std::string out;
    for (const auto& comp : components_) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i) out += ' ';
            out += comp[i].role == Role::Over ? 'O' : 'U';
            out += std::to_string(comp[i].crossing);
            out += comp[i].sign > 0 ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

int SignedGaussCode::crossing_count() const {
    std::vector<int> ids;
    for (const auto& comp : components_)
        for (const auto& p : comp) ids.push_back(p.crossing);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return static_cast<int>(ids.size());
}

int SignedGaussCode::interlinked_crossing_count() const {
    std::map<int, std::pair<int, int>> comps; // id -> (over comp, under comp)
    for (int c = 0; c < static_cast<int>(components_.size()); ++c)
        for (const auto& p : components_[c]) {
            auto& entry = comps.try_emplace(p.crossing, -1, -1).first->second;
            (p.role == Role::Over ? entry.first : entry.second) = c;
        }
    int count = 0;
    for (const auto& [id, pair] : comps)
        if (pair.first != pair.second) ++count;
    return count;
}

int SignedGaussCode::max_crossing_id() const {
    int max_id = 0;
    for (const auto& comp : components_)
        for (const auto& p : comp) max_id = std::max(max_id, p.crossing);
    return max_id;
}

ArcTable arcs(const SignedGaussCode& code) {
    ArcTable table;
    const auto& comps = code.components();
    table.comp_arcs_.resize(comps.size());
    table.passage_.resize(comps.size());
    table.arc_component_.push_back(0); // [0] unused

    std::map<int, CrossingRecord> records;
    // First pass: fix arc ids and per-passage incoming/outgoing arcs.
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        const auto& comp = comps[c];
        const int len = static_cast<int>(comp.size());
        std::vector<int> unders;
        for (int i = 0; i < len; ++i)
            if (comp[i].role == Role::Under) unders.push_back(i);
        const int k = static_cast<int>(unders.size());

        const int base = table.arc_count_; // global id of this component's local arc 0 minus 1
        const int local_count = k == 0 ? 1 : k;
        for (int j = 0; j < local_count; ++j) {
            table.comp_arcs_[c].push_back(base + j + 1);
            table.arc_component_.push_back(c + 1);
        }
        table.arc_count_ += local_count;

        // Local arc j runs from just after unders[j] up to and including
        // unders[j+1]; with no unders the whole component is arc 0.
        auto covering = [&](int pos) {
            if (k == 0) return 0;
            auto it = std::lower_bound(unders.begin(), unders.end(), pos);
            int t = it == unders.end() ? 0 : static_cast<int>(it - unders.begin());
            return (t - 1 + k) % k;
        };

        table.passage_[c].resize(len);
        for (int i = 0; i < len; ++i) {
            ArcTable::PassageArcs pa;
            if (comp[i].role == Role::Under && k > 0) {
                int t = static_cast<int>(std::lower_bound(unders.begin(), unders.end(), i) -
                                         unders.begin());
                pa.incoming = base + (t - 1 + k) % k + 1;
                pa.outgoing = base + t + 1;
            } else {
                pa.incoming = pa.outgoing = base + covering(i) + 1;
            }
            table.passage_[c][i] = pa;
        }
    }

    // Second pass: one record per crossing from its two passages.
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int i = 0; i < static_cast<int>(comps[c].size()); ++i) {
            const Passage& p = comps[c][i];
            CrossingRecord& rec = records[p.crossing];
            rec.id = p.crossing;
            rec.sign = p.sign;
            if (p.role == Role::Over) {
                rec.over_component = c + 1;
                rec.over_arc = table.passage_[c][i].incoming;
            } else {
                rec.under_component = c + 1;
                rec.under_in_arc = table.passage_[c][i].incoming;
                rec.under_out_arc = table.passage_[c][i].outgoing;
            }
        }

    table.crossings_.reserve(records.size());
    for (auto& [id, rec] : records) table.crossings_.push_back(rec);
    return table;
}

} // namespace quandlink
