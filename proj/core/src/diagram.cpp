#include "birack/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace birack {

LinkDiagram::LinkDiagram(std::vector<std::vector<Token>> components)
    : components_(std::move(components)) {
    // semiarc layout: the arc after token t of component c has id
    // offset[c] + t; a crossing-free component is one closed semiarc.
    std::vector<int> offsets;
    int total = 0;
    for (const auto& comp : components_) {
        offsets.push_back(total);
        total += std::max<int>(1, static_cast<int>(comp.size()));
    }
    semiarc_count_ = total;
    semiarc_component_.resize(total);
    for (std::size_t c = 0; c < components_.size(); ++c) {
        const int m = std::max<int>(1, static_cast<int>(components_[c].size()));
        for (int t = 0; t < m; ++t) semiarc_component_[offsets[c] + t] = static_cast<int>(c);
    }

    struct Visit {
        int comp, tok;
        bool over;
        int sign;
    };
    std::map<int, std::vector<Visit>> visits;
    for (std::size_t c = 0; c < components_.size(); ++c)
        for (std::size_t t = 0; t < components_[c].size(); ++t) {
            const Token& tk = components_[c][t];
            if (tk.id <= 0) throw InconsistentCrossing(tk.id, "crossing ids must be positive");
            visits[tk.id].push_back(
                {static_cast<int>(c), static_cast<int>(t), tk.over, tk.sign});
        }

    auto arc_after = [&](int c, int t) { return offsets[c] + t; };
    auto arc_before = [&](int c, int t) {
        const int m = static_cast<int>(components_[c].size());
        return offsets[c] + (t - 1 + m) % m;
    };

    for (const auto& [id, vs] : visits) {
        if (vs.size() != 2)
            throw InconsistentCrossing(id, "must appear exactly twice, appears " +
                                               std::to_string(vs.size()) + " times");
        if (vs[0].over == vs[1].over)
            throw InconsistentCrossing(id, "needs one over and one under passage");
        if (vs[0].sign != vs[1].sign) throw InconsistentCrossing(id, "sign mismatch");
        const Visit& ov = vs[0].over ? vs[0] : vs[1];
        const Visit& un = vs[0].over ? vs[1] : vs[0];
        Crossing cr;
        cr.id = id;
        cr.sign = ov.sign;
        cr.over_in = arc_before(ov.comp, ov.tok);
        cr.over_out = arc_after(ov.comp, ov.tok);
        cr.under_in = arc_before(un.comp, un.tok);
        cr.under_out = arc_after(un.comp, un.tok);
        crossings_.push_back(cr);
        if (ov.comp == un.comp) {
            // defer writhe accumulation until the vector exists
        }
    }
    writhe_.assign(components_.size(), 0);
    for (const auto& [id, vs] : visits)
        if (vs[0].comp == vs[1].comp) writhe_[vs[0].comp] += vs[0].sign;
}

LinkDiagram LinkDiagram::parse_gauss(const std::string& text) {
    std::vector<std::vector<Token>> comps;
    std::vector<Token> cur;
    std::size_t i = 0;
    const std::size_t len = text.size();
    while (true) {
        if (i == len || text[i] == ';') {
            comps.push_back(cur);
            cur.clear();
            if (i == len) break;
            ++i;
            continue;
        }
        const char ch = text[i];
        if (ch == ' ' || ch == ',' || ch == '\t') {
            ++i;
            continue;
        }
        if (ch != 'O' && ch != 'U') throw ParseError(i, "expected 'O' or 'U'");
        Token tk;
        tk.over = ch == 'O';
        ++i;
        std::size_t j = i;
        while (j < len && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw ParseError(i, "expected crossing id");
        tk.id = std::stoi(text.substr(i, j - i));
        if (j == len || (text[j] != '+' && text[j] != '-'))
            throw ParseError(j, "expected '+' or '-'");
        tk.sign = text[j] == '+' ? 1 : -1;
        cur.push_back(tk);
        i = j + 1;
    }
    // trailing spaces-only final component counts as a circle only if the
    // text was empty or ended in ';'; both handled above.
    return LinkDiagram(std::move(comps));
}

std::string LinkDiagram::to_gauss() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (c) os << ';';
        for (const Token& tk : components_[c])
            os << (tk.over ? 'O' : 'U') << tk.id << (tk.sign > 0 ? '+' : '-');
    }
    return os.str();
}

LinkDiagram catalog(const std::string& name) {
    if (name == "unknot") return LinkDiagram::parse_gauss("");
    if (name == "3_1") return LinkDiagram::parse_gauss("O1+U2+O3+U1+O2+U3+");
    if (name == "4_1") return LinkDiagram::parse_gauss("O1+U2-O4-U1+O3+U4-O2-U3+");
    if (name == "L2a1") return LinkDiagram::parse_gauss("O1+U2+;U1+O2+");
    if (name == "L4a1") return LinkDiagram::parse_gauss("O1+U2+O3+U4+;U1+O2+U3+O4+");
    if (name == "v3.7") return LinkDiagram::parse_gauss("O1+U2+O3-U1+O2+U3-");
    if (name == "v4.47") return LinkDiagram::parse_gauss("O1+O2-U1+O3-U4+U2-O4+U3-");
    throw UnknownName(name);
}

std::vector<std::string> catalog_names() {
    return {"unknot", "3_1", "4_1", "L2a1", "L4a1", "v3.7", "v4.47"};
}

namespace {

int next_free_id(const LinkDiagram& L) {
    int hi = 0;
    for (const auto& comp : L.components())
        for (const Token& tk : comp) hi = std::max(hi, tk.id);
    return hi + 1;
}

}  // namespace

LinkDiagram insert_kink(const LinkDiagram& L, int component, int position, bool positive,
                        bool over_first) {
    auto comps = L.components();
    if (component < 0 || component >= static_cast<int>(comps.size()))
        throw BadParameters("component index out of range");
    auto& comp = comps[component];
    if (position < 0 || position > static_cast<int>(comp.size()))
        throw BadParameters("kink position out of range");
    const int id = next_free_id(L);
    const int sign = positive ? 1 : -1;
    const Token a{id, over_first, sign};
    const Token b{id, !over_first, sign};
    comp.insert(comp.begin() + position, {a, b});
    return LinkDiagram(std::move(comps));
}

LinkDiagram add_kinks(const LinkDiagram& L, const std::vector<int>& counts) {
    if (counts.size() != static_cast<std::size_t>(L.component_count()))
        throw BadParameters("counts must have one entry per component");
    LinkDiagram out = L;
    for (std::size_t c = 0; c < counts.size(); ++c)
        for (int k = 0; k < counts[c]; ++k)
            out = insert_kink(out, static_cast<int>(c), 0, true);
    return out;
}

LinkDiagram set_framing(const LinkDiagram& L, const std::vector<int>& target) {
    if (target.size() != static_cast<std::size_t>(L.component_count()))
        throw BadParameters("target framing must have one entry per component");
    LinkDiagram out = L;
    for (std::size_t c = 0; c < target.size(); ++c) {
        const int delta = target[c] - L.writhe()[c];
        for (int k = 0; k < std::abs(delta); ++k)
            out = insert_kink(out, static_cast<int>(c), 0, delta > 0);
    }
    return out;
}

std::vector<std::pair<std::vector<int>, LinkDiagram>> framing_tile(const LinkDiagram& L, int N) {
    if (N < 1) throw BadParameters("rank must be >= 1");
    const int c = L.component_count();
    std::vector<std::pair<std::vector<int>, LinkDiagram>> out;
    std::vector<int> w(c, 0);
    while (true) {
        std::vector<int> counts(c);
        for (int i = 0; i < c; ++i) counts[i] = ((w[i] - L.writhe()[i]) % N + N) % N;
        out.emplace_back(w, add_kinks(L, counts));
        int i = c - 1;
        for (; i >= 0; --i) {
            if (++w[i] < N) break;
            w[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

namespace {

// Thread semiarc `a` over semiarc `b` (a on the over strand twice, signs
// +/-). `swap_order` reverses the order in which the under strand meets
// the two new crossings, giving the counter-oriented poke.
LinkDiagram r2_poke(const LinkDiagram& L, int arc_a, int arc_b, bool swap_order) {
    auto comps = L.components();
    const int id1 = next_free_id(L), id2 = id1 + 1;
    // locate (component, insert position) for a semiarc: the arc after
    // token t inserts at position t+1; a crossing-free component inserts at 0.
    auto locate = [&](int arc) {
        int total = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const int m = std::max<int>(1, static_cast<int>(comps[c].size()));
            if (arc < total + m) return std::pair<int, int>(static_cast<int>(c),
                                                            comps[c].empty() ? 0 : arc - total + 1);
            total += m;
        }
        throw BadParameters("semiarc out of range");
    };
    auto [ca, pa] = locate(arc_a);
    auto [cb, pb] = locate(arc_b);
    const Token o1{id1, true, 1}, o2{id2, true, -1};
    const Token u1{id1, false, 1}, u2{id2, false, -1};
    std::vector<Token> over_ins{o1, o2};
    std::vector<Token> under_ins = swap_order ? std::vector<Token>{u2, u1}
                                              : std::vector<Token>{u1, u2};
    if (ca == cb && pa == pb) {
        // self-poke: strand passes over itself immediately
        std::vector<Token> ins{o1, o2, under_ins[0], under_ins[1]};
        comps[ca].insert(comps[ca].begin() + pa, ins.begin(), ins.end());
    } else if (ca == cb && pb > pa) {
        comps[cb].insert(comps[cb].begin() + pb, under_ins.begin(), under_ins.end());
        comps[ca].insert(comps[ca].begin() + pa, over_ins.begin(), over_ins.end());
    } else {
        comps[ca].insert(comps[ca].begin() + pa, over_ins.begin(), over_ins.end());
        comps[cb].insert(comps[cb].begin() + pb, under_ins.begin(), under_ins.end());
    }
    return LinkDiagram(std::move(comps));
}

// Remove one cancelling R2 pair if the code contains one.
bool try_r2_removal(const LinkDiagram& L, LinkDiagram& out) {
    auto comps = L.components();
    for (std::size_t c1 = 0; c1 < comps.size(); ++c1) {
        const int m1 = static_cast<int>(comps[c1].size());
        for (int i = 0; i < m1; ++i) {
            const Token& a = comps[c1][i];
            const Token& b = comps[c1][(i + 1) % m1];
            if (a.id == b.id || a.over != b.over || a.sign != -b.sign) continue;
            // find the partner visits adjacent somewhere (same or other component)
            for (std::size_t c2 = 0; c2 < comps.size(); ++c2) {
                const int m2 = static_cast<int>(comps[c2].size());
                for (int j = 0; j < m2; ++j) {
                    const Token& p = comps[c2][j];
                    const Token& q = comps[c2][(j + 1) % m2];
                    if (c1 == c2 && (j == i || (j + 1) % m2 == i || j == (i + 1) % m1)) continue;
                    const bool match = (p.id == a.id && q.id == b.id) ||
                                       (p.id == b.id && q.id == a.id);
                    if (!match || p.over == a.over || q.over == b.over) continue;
                    std::vector<char> drop1(m1, 0), drop2(m2, 0);
                    drop1[i] = drop1[(i + 1) % m1] = 1;
                    std::vector<std::vector<Token>> nc = comps;
                    if (c1 == c2) {
                        drop1[j] = drop1[(j + 1) % m2] = 1;
                    } else {
                        drop2[j] = drop2[(j + 1) % m2] = 1;
                    }
                    std::vector<Token> n1;
                    for (int k = 0; k < m1; ++k)
                        if (!drop1[k]) n1.push_back(comps[c1][k]);
                    nc[c1] = n1;
                    if (c1 != c2) {
                        std::vector<Token> n2;
                        for (int k = 0; k < m2; ++k)
                            if (!drop2[k]) n2.push_back(comps[c2][k]);
                        nc[c2] = n2;
                    }
                    out = LinkDiagram(std::move(nc));
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

std::vector<LinkDiagram> reidemeister_variants(const LinkDiagram& L) {
    std::vector<LinkDiagram> out;
    const int c = L.component_count();
    // co- and counter-oriented pokes of the first semiarc over another arc
    out.push_back(r2_poke(L, 0, L.semiarc_count() > 1 ? L.semiarc_count() - 1 : 0, false));
    out.push_back(r2_poke(L, 0, L.semiarc_count() > 1 ? L.semiarc_count() - 1 : 0, true));
    if (c > 1) {
        // poke across components
        int arc_b = 0;
        for (int a = 0; a < L.semiarc_count(); ++a)
            if (L.semiarc_component(a) == 1) {
                arc_b = a;
                break;
            }
        out.push_back(r2_poke(L, 0, arc_b, false));
        out.push_back(r2_poke(L, 0, arc_b, true));
    }
    // +/- kink pair on each component (framing-neutral)
    for (int i = 0; i < c; ++i) {
        LinkDiagram k1 = insert_kink(L, i, 0, true);
        out.push_back(insert_kink(k1, i, 0, false));
    }
    // an R2 removal applied to a poked variant round-trips to a diagram of L
    LinkDiagram removed = L;
    if (try_r2_removal(out.front(), removed)) out.push_back(removed);
    return out;
}

}  // namespace birack
