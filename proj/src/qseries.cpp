#include "sc/qseries.hpp"

namespace sc {

namespace {

// sigma_k(n): sum of k-th powers of divisors.
Rat sigma(int k, int n) {
    Rat s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        Rat p = 1;
        for (int i = 0; i < k; ++i) p *= d;
        s += p;
    }
    return s;
}

}  // namespace

QSeries eisenstein(int k, int nq) {
    int sk, mult;
    switch (k) {
        case 2: sk = 1; mult = -24; break;
        case 4: sk = 3; mult = 240; break;
        case 6: sk = 5; mult = -504; break;
        default: throw UnsupportedWeight(k);
    }
    std::vector<Scalar> c(nq + 1);
    c[0] = Scalar(1);
    for (int n = 1; n <= nq; ++n) c[n] = Scalar(Rat(mult) * sigma(sk, n));
    return QSeries(std::move(c), nq);
}

QSeries named_constant(const std::string& name, int nq) {
    if (name == "E2") return eisenstein(2, nq);
    if (name == "E4") return eisenstein(4, nq);
    if (name == "E6") return eisenstein(6, nq);
    if (name == "eta1")
        return Scalar::lambda_pow(4, Rat(-1, 12)) * eisenstein(2, nq);
    if (name == "g2")
        return Scalar::lambda_pow(8, Rat(1, 12)) * eisenstein(4, nq);
    if (name == "g3")
        return Scalar::lambda_pow(12, Rat(-1, 216)) * eisenstein(6, nq);
    if (name == "eta1_dot")
        return Scalar::lambda_pow(6, Rat(-1, 12)) * eisenstein(2, nq).partial();
    if (name == "g2_dot")
        return Scalar::lambda_pow(10, Rat(1, 12)) * eisenstein(4, nq).partial();
    if (name == "g3_dot")
        return Scalar::lambda_pow(14, Rat(-1, 216)) * eisenstein(6, nq).partial();
    throw UnknownName(name);
}

}  // namespace sc
