#include "dkr/energy.hpp"

#include <stdexcept>

#include "dkr/rmatrix.hpp"

namespace dkr {

int factor_energy(const Column& b, int n, Label lab) {
    if (!in_label(b, n, lab)) throw std::invalid_argument(b.str() + " is not an element of " + lab.str(n));
    if (lab.is_spinor(n) || lab.kind == Kind::EN || lab.kind == Kind::ENm1) return 0;
    return (b.height() - drop(b, n).height()) / 2;
}

TensorElement expand_to_kr(int n, const TensorElement& t) {
    TensorElement out;
    for (int j = 0; j < t.size(); ++j) {
        const Label lab = t.labels[j];
        const Column& c = t.cols[j];
        switch (lab.kind) {
            case Kind::KR:
                out.labels.push_back(lab);
                out.cols.push_back(c);
                break;
            case Kind::HatNm1:
            case Kind::HatN:
            case Kind::HatBarN:
            case Kind::EN:
            case Kind::ENm1: {
                // E columns are elements of HatN / HatBarN and expand like them
                const Kind hk = lab.kind == Kind::EN ? Kind::HatN : lab.kind == Kind::ENm1 ? Kind::HatBarN : lab.kind;
                const HatIso& iso = hat_iso(n, hk);
                const Crystal& H = get_crystal(n, Label::of(n, hk));
                const Crystal& R = get_crystal(n, iso.right);
                const Crystal& L = get_crystal(n, iso.left);
                int x = iso.to_pair[H.at(c)];
                out.labels.push_back(iso.left);
                out.cols.push_back(L.elems[x / R.size()]);
                out.labels.push_back(iso.right);
                out.cols.push_back(R.elems[x % R.size()]);
                break;
            }
        }
    }
    return out;
}

static EnergyReport dny(int n, const Tensor& t0, bool keep_terms) {
    EnergyReport rep;
    const int L = static_cast<int>(t0.idx.size());
    // position p from the right sits at left index L - p
    for (int j = 1; j <= L; ++j) {
        Tensor t = t0;
        // R_{j-1} first, down to R_{i+1}; then H_i; continue down to R_1 for the D term
        for (int i = j - 1; i >= 1; --i) {
            int h = local_energy_at(n, t, L - i - 1);
            rep.value += h;
            if (keep_terms) rep.terms.push_back({true, i, j, h});
            apply_r_at(n, t, L - i - 1);
        }
        const Crystal& c = *t.cr[L - 1];
        int d = factor_energy(c.elems[t.idx[L - 1]], n, c.label);
        rep.value += d;
        if (keep_terms) rep.terms.push_back({false, 0, j, d});
    }
    return rep;
}

EnergyReport tensor_energy(int n, const TensorElement& t) {
    return dny(n, Tensor::from(n, expand_to_kr(n, t)), true);
}

int tensor_energy_value(int n, const Tensor& t) {
    for (const Crystal* c : t.cr)
        if (c->label.kind != Kind::KR) return tensor_energy(n, t.element()).value;
    return dny(n, t, false).value;
}

}  // namespace dkr
