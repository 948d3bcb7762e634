#include "wreath/rep/loewy.hpp"

namespace wreath {

BitMatrix radical(const GModule& m, const std::vector<GModule>& simples) {
    BitMatrix all(m.dim(), 0);
    for (auto& s : simples)
        for (auto& f : hom_space(m, s)) all = hstack(all, f);
    if (all.cols() == 0) return BitMatrix::identity(m.dim());
    return nullspace(all);
}

BitMatrix socle(const GModule& m, const std::vector<GModule>& simples) {
    EchelonBasis e(m.dim());
    for (auto& s : simples)
        for (auto& f : hom_space(s, m))
            for (std::size_t r = 0; r < f.rows(); ++r) e.add(f.row_vec(r));
    return e.matrix();
}

Layer semisimple_layer(const GModule& l, const std::vector<GModule>& simples) {
    Layer out;
    out.dim = l.dim();
    std::size_t acc = 0;
    for (std::size_t i = 0; i < simples.size(); ++i) {
        std::size_t h = hom_space(l, simples[i]).size();
        if (h == 0) continue;
        std::size_t e = hom_space(simples[i], simples[i]).size();
        out.parts.emplace_back(i, h / e);
        acc += (h / e) * simples[i].dim();
    }
    if (acc != l.dim()) throw ModuleError("semisimple_layer: layer is not a sum of the given simples");
    return out;
}

LoewyReport loewy(const GModule& m, std::uint64_t seed, const std::vector<GModule>* simples) {
    LoewyReport rep;
    if (simples) rep.simples = *simples;
    else rep.simples = distinct_simples({chop(m, seed)});

    // radical series
    GModule x = m;
    BitMatrix emb = BitMatrix::identity(m.dim());
    rep.radical_series.push_back(emb);
    while (x.dim() > 0) {
        EchelonBasis rad = EchelonBasis::from_matrix(radical(x, rep.simples));
        if (rad.dim() == x.dim()) throw ModuleError("loewy: the radical did not shrink; simples list incomplete");
        rep.radical_layers.push_back(semisimple_layer(quotient(x, rad), rep.simples));
        emb = mat_mul(rad.matrix(), emb);
        rep.radical_series.push_back(emb);
        x = submodule(x, rad);
    }

    // socle series
    EchelonBasis cur(m.dim());
    rep.socle_series.push_back(BitMatrix(0, m.dim()));
    while (!cur.full()) {
        GModule q = quotient(m, cur);
        EchelonBasis s = EchelonBasis::from_matrix(socle(q, rep.simples));
        if (s.dim() == 0) throw ModuleError("loewy: empty socle; simples list incomplete");
        rep.socle_layers.push_back(semisimple_layer(submodule(q, s), rep.simples));
        EchelonBasis next = cur;
        for (std::size_t i = 0; i < s.dim(); ++i) next.add(lift_from_quotient(cur, s.row(i)));
        cur = std::move(next);
        rep.socle_series.push_back(cur.matrix());
    }

    rep.uniserial = true;
    for (auto& l : rep.radical_layers)
        if (!l.is_simple()) rep.uniserial = false;
    return rep;
}

std::string LoewyReport::radical_string(const std::vector<std::string>& names) const {
    std::string s;
    for (auto& l : radical_layers) {
        if (!s.empty()) s += '/';
        std::string layer;
        for (auto& [i, mult] : l.parts)
            for (std::size_t k = 0; k < mult; ++k) {
                if (!layer.empty()) layer += '+';
                layer += i < names.size() ? names[i] : std::to_string(simples[i].dim());
            }
        s += l.is_simple() ? layer : "(" + layer + ")";
    }
    return s;
}

}  // namespace wreath
