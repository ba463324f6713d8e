#include "builders_util.hpp"

namespace qid::bd {

namespace {

int64_t need_q(const Caps& caps) {
    if (caps.exact_q())
        throw SeriesError("builder needs a finite truncation order");
    return caps.q;
}

/* a^i (-(c/a) q)_i = prod_{s=1}^{i} (a + c q^s), the polynomial form of the
 * split-parameter Pochhammer. */
Series a_fold(int i, Param x = Param::a) {
    Series r = one();
    for (int s = 1; s <= i; ++s)
        r = r * (Series::variable(x) + term(1, mc(1) * qpow(s)));
    return r;
}

/* Sum_i q^{T_i} (-cq)_i [M, i]: the shared left side of the two finite
 * Lebesgue identities. */
Series finite_lebesgue_lhs(int M) {
    Series acc;
    for (int i = 0; i <= M; ++i)
        acc += qp(T(i)) * P(-1, mc(1) * qpow(1), 1, i) * bin(M, i);
    return acc;
}

Series lebesgue_lhs(int64_t Q) {
    Series acc = capped_sum_start(Q);
    for (int i = 0; T(i) <= Q; ++i)
        acc += qp(T(i)) * P(-1, mc(1) * qpow(1), 1, i) * Rq(1, 1, i, Q);
    return acc;
}

Series lebesgue_rhs(int64_t Q) {
    return Pinf(-1, qpow(1), 1, Q) * Pinf(-1, mc(1) * qpow(2), 2, Q);
}

/* Sum over i of a^i q^{T_i} (-(c/a)q)_i (-y q^{i+1})_inf / (q)_i; the y
 * parameter lets the a<->b symmetry check reuse the builder. */
Series unified_lhs(int64_t Q, Param x, Param y) {
    Series acc = capped_sum_start(Q);
    for (int i = 0; T(i) <= Q; ++i) {
        Series pre = qp(T(i)) * a_fold(i, x);
        acc += pre * Pinf(-1, vpow(y, 1) * qpow(i + 1), 1, Q) *
               Rq(1, 1, i, Q);
    }
    return acc;
}

Series schur_key_product(int64_t Q) {
    return Pinf(-1, ma(1) * qpow(1), 1, Q) * Pinf(-1, mb(1) * qpow(1), 1, Q);
}

Series schur_key_triple(int64_t Q) {
    Series acc = capped_sum_start(Q);
    for (int al = 0; T(al) <= Q; ++al)
        for (int be = 0; T(al + be) <= Q; ++be)
            for (int ga = 0; T(al + be + ga) + T(ga) <= Q; ++ga) {
                Series pre = term(1, ma(al + ga) * mb(be + ga) *
                                         qpow(T(al + be + ga) + T(ga)));
                acc += pre * Rq(1, 1, al, Q) * Rq(1, 1, be, Q) *
                       Rq(1, 1, ga, Q);
            }
    return acc;
}

Series schur_key_double(int64_t Q) {
    Series acc = capped_sum_start(Q);
    for (int i = 0; T(i) <= Q; ++i)
        for (int j = 0; T(i) + T(j) <= Q; ++j)
            acc += term(1, ma(i) * mb(j) * qpow(T(i) + T(j))) *
                   Rq(1, 1, i, Q) * Rq(1, 1, j, Q);
    return acc;
}

}  // namespace

std::vector<IdentityEntry> make_entries_classical() {
    std::vector<IdentityEntry> es;

    {
        IdentityEntry e;
        e.id = "lebesgue-1.1";
        e.source = "(1.1)";
        e.statement =
            "sum_i q^T_i (-cq)_i/(q)_i = prod_m (1+q^m)(1+c q^2m)";
        e.mode = VerifyMode::truncated;
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         return s == Side::lhs ? lebesgue_lhs(Q)
                                               : lebesgue_rhs(Q);
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "gollnitz-1.2a";
        e.source = "(1.2a)";
        e.statement =
            "sum_i q^(i^2+i) (-cq^-1;q^2)_i/(q^2;q^2)_i = prod_m "
            "(1+q^4m)(1+q^(4m-2))(1+c q^(4m-3))";
        e.mode = VerifyMode::truncated;
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         if (s == Side::lhs) {
                             Series acc = capped_sum_start(Q);
                             for (int i = 0;; ++i) {
                                 Series pre =
                                     qp(int64_t(i) * i + i) *
                                     P(-1, mc(1) * qpow(-1), 2, i);
                                 if (pre.min_q() > Q) break;
                                 acc += pre * Rq(2, 2, i, recip_order(Q, pre));
                             }
                             return acc;
                         }
                         return Pinf(-1, qpow(4), 4, Q) *
                                Pinf(-1, qpow(2), 4, Q) *
                                Pinf(-1, mc(1) * qpow(1), 4, Q);
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "gollnitz-1.2b";
        e.source = "(1.2b)";
        e.statement =
            "sum_i q^(i^2+i) (-cq;q^2)_i/(q^2;q^2)_i = prod_m "
            "(1+q^4m)(1+q^(4m-2))(1+c q^(4m-1))";
        e.mode = VerifyMode::truncated;
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         if (s == Side::lhs) {
                             Series acc = capped_sum_start(Q);
                             for (int i = 0; int64_t(i) * i + i <= Q; ++i) {
                                 Series pre = qp(int64_t(i) * i + i) *
                                              P(-1, mc(1) * qpow(1), 2, i);
                                 acc += pre * Rq(2, 2, i, Q);
                             }
                             return acc;
                         }
                         return Pinf(-1, qpow(4), 4, Q) *
                                Pinf(-1, qpow(2), 4, Q) *
                                Pinf(-1, mc(1) * qpow(3), 4, Q);
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "schur-key-1.3";
        e.source = "(1.3)";
        e.statement =
            "sum a^(al+ga) b^(be+ga) q^(T_s+T_ga)/((q)_al (q)_be (q)_ga) = "
            "sum a^i b^j q^(T_i+T_j)/((q)_i (q)_j) = prod (1+aq^i)(1+bq^i)";
        e.mode = VerifyMode::truncated;
        e.checks = {
            {"triple=product",
             [](Side s, const Assignment&, const Caps& caps) {
                 int64_t Q = need_q(caps);
                 return s == Side::lhs ? schur_key_triple(Q)
                                       : schur_key_product(Q);
             }},
            {"double=product",
             [](Side s, const Assignment&, const Caps& caps) {
                 int64_t Q = need_q(caps);
                 return s == Side::lhs ? schur_key_double(Q)
                                       : schur_key_product(Q);
             }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "binom-exp-1.6";
        e.source = "(1.6)";
        e.statement = "(-cq)_n = sum_k c^k q^T_k [n, k]";
        e.mode = VerifyMode::exact;
        e.param_names = {"n"};
        e.defaults = {{"n", 12}};
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int n = get(a, "n");
                         if (s == Side::lhs)
                             return P(-1, mc(1) * qpow(1), 1, n);
                         Series acc;
                         for (int k = 0; k <= n; ++k)
                             acc += term(1, mc(k) * qpow(T(k))) * bin(n, k);
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "proof-split-2.1";
        e.source = "(2.1)";
        e.statement =
            "(-aq)_inf (-bq)_inf = sum_i a^i q^T_i (-bq)_i "
            "(-bq^(i+1))_inf/(q)_i";
        e.mode = VerifyMode::truncated;
        auto split_sum = [](int64_t Q) {
            Series acc = capped_sum_start(Q);
            for (int i = 0; T(i) <= Q; ++i) {
                Series pre = term(1, ma(i) * qpow(T(i))) *
                             P(-1, mb(1) * qpow(1), 1, i);
                acc += pre * Pinf(-1, mb(1) * qpow(i + 1), 1, Q) *
                       Rq(1, 1, i, Q);
            }
            return acc;
        };
        e.checks = {
            {"split", [split_sum](Side s, const Assignment&, const Caps& c) {
                 int64_t Q = need_q(c);
                 return s == Side::lhs ? schur_key_product(Q) : split_sum(Q);
             }},
            {"expanded",
             [split_sum](Side s, const Assignment&, const Caps& c) {
                 int64_t Q = need_q(c);
                 if (s == Side::lhs) return split_sum(Q);
                 Series acc = capped_sum_start(Q);
                 for (int i = 0; T(i) <= Q; ++i) {
                     Series inner1 = capped_sum_start(Q);
                     for (int j = 0; j <= i; ++j)
                         inner1 += term(1, mb(j) * qpow(T(j))) *
                                   Rq(1, 1, j, Q) * Rq(1, 1, i - j, Q);
                     Series inner2 = capped_sum_start(Q);
                     for (int l = 0; T(l) + int64_t(i) * l <= Q; ++l)
                         inner2 += term(1, mb(l) * qpow(T(l) + int64_t(i) * l)) *
                                   Rq(1, 1, l, Q);
                     acc += term(1, ma(i) * qpow(T(i))) * inner1 * inner2;
                 }
                 return acc;
             }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "finite-lebesgue-3.1";
        e.source = "Thm 3.1";
        e.statement =
            "sum_i q^T_i (-cq)_i [M,i] = (-q)_M sum_k c^k q^2T_k "
            "(q^(M-k+1))_k/(q^2;q^2)_k";
        e.mode = VerifyMode::exact_bounded;
        e.exact_side = Side::lhs;
        e.param_names = {"M"};
        e.defaults = {{"M", 6}};
        e.checks = {{"", [](Side s, const Assignment& a, const Caps& caps) {
                         int M = get(a, "M");
                         if (s == Side::lhs) return finite_lebesgue_lhs(M);
                         int64_t Q = need_q(caps);
                         Series acc = capped_sum_start(Q);
                         for (int k = 0; k <= M; ++k) {
                             Series pre = term(1, mc(k) * qpow(2 * T(k))) *
                                          P(1, qpow(M - k + 1), 1, k);
                             acc += pre * Rq(2, 2, k, Q);
                         }
                         return P(-1, qpow(1), 1, M) * acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "finite-lebesgue-3.8";
        e.source = "(3.8)";
        e.statement =
            "sum_N q^T_N sum_k b^k q^T_k [m,k][n,N-k] = (-q)_n (q)_m sum_i "
            "b^i q^(i^2+i) (-q^(n+1))_i/((q^2;q^2)_i (q)_(m-i))";
        e.mode = VerifyMode::exact_bounded;
        e.exact_side = Side::lhs;
        e.param_names = {"m", "n"};
        e.defaults = {{"m", 4}, {"n", 4}};
        e.checks = {{"", [](Side s, const Assignment& a, const Caps& caps) {
                         int m = get(a, "m"), n = get(a, "n");
                         if (s == Side::lhs) {
                             Series acc;
                             for (int N = 0; N <= m + n; ++N) {
                                 Series inner;
                                 for (int k = 0; k <= N; ++k)
                                     inner += term(1, mb(k) * qpow(T(k))) *
                                              bin(m, k) * bin(n, N - k);
                                 acc += qp(T(N)) * inner;
                             }
                             return acc;
                         }
                         int64_t Q = need_q(caps);
                         Series acc = capped_sum_start(Q);
                         for (int i = 0; i <= m; ++i) {
                             Series pre =
                                 term(1, mb(i) * qpow(int64_t(i) * i + i)) *
                                 P(-1, qpow(n + 1), 1, i);
                             acc += pre * Rq(2, 2, i, Q) * Rq(1, 1, m - i, Q);
                         }
                         return P(-1, qpow(1), 1, n) * P(1, qpow(1), 1, m) *
                                acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "transform-3.3";
        e.source = "Lemma 3.3";
        e.statement =
            "sum_n a^n q^(n^2) (-bq;q^2)_n/(q^2;q^2)_n = sum_n (ab)^n "
            "q^(2n^2) (-aq^(2n+1);q^2)_inf/(q^2;q^2)_n";
        e.mode = VerifyMode::truncated;
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         Series acc = capped_sum_start(Q);
                         if (s == Side::lhs) {
                             for (int n = 0; int64_t(n) * n <= Q; ++n) {
                                 Series pre =
                                     term(1, ma(n) * qpow(int64_t(n) * n)) *
                                     P(-1, mb(1) * qpow(1), 2, n);
                                 acc += pre * Rq(2, 2, n, Q);
                             }
                             return acc;
                         }
                         for (int n = 0; 2 * int64_t(n) * n <= Q; ++n) {
                             Series pre = term(
                                 1, ma(n) * mb(n) * qpow(2 * int64_t(n) * n));
                             acc += pre *
                                    Pinf(-1, ma(1) * qpow(2 * n + 1), 2, Q) *
                                    Rq(2, 2, n, Q);
                         }
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "finite-transform-3.4";
        e.source = "Lemma 3.4";
        e.statement =
            "sum_N a^N q^(N^2) sum_k b^k q^(k^2) [m,k]_2 [n,N-k]_2 = sum_i "
            "(ab)^i q^(2i^2) [m,i]_2 (-aq^(2i+1);q^2)_n";
        e.mode = VerifyMode::exact;
        e.param_names = {"m", "n"};
        e.defaults = {{"m", 4}, {"n", 4}};
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int m = get(a, "m"), n = get(a, "n");
                         Series acc;
                         if (s == Side::lhs) {
                             for (int N = 0; N <= m + n; ++N) {
                                 Series inner;
                                 for (int k = 0; k <= std::min(N, m); ++k)
                                     inner += term(1, mb(k) *
                                                          qpow(int64_t(k) * k)) *
                                              bin(m, k, 2) * bin(n, N - k, 2);
                                 acc += term(1, ma(N) * qpow(int64_t(N) * N)) *
                                        inner;
                             }
                             return acc;
                         }
                         for (int i = 0; i <= m; ++i)
                             acc += term(1, ma(i) * mb(i) *
                                                qpow(2 * int64_t(i) * i)) *
                                    bin(m, i, 2) *
                                    P(-1, ma(1) * qpow(2 * i + 1), 2, n);
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "unified-4.1";
        e.source = "Thm 4.1";
        e.statement =
            "sum_i a^i q^T_i (-(c/a)q)_i (-bq^(i+1))_inf/(q)_i = sum a^t b^l "
            "c^j q^(T_(t+l+j)+T_j)/((q)_t (q)_l (q)_j)";
        e.mode = VerifyMode::truncated;
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         if (s == Side::lhs)
                             return unified_lhs(Q, Param::a, Param::b);
                         Series acc = capped_sum_start(Q);
                         for (int t = 0; T(t) <= Q; ++t)
                             for (int l = 0; T(t + l) <= Q; ++l)
                                 for (int j = 0; T(t + l + j) + T(j) <= Q;
                                      ++j) {
                                     Series pre = term(
                                         1, ma(t) * mb(l) * mc(j) *
                                                qpow(T(t + l + j) + T(j)));
                                     acc += pre * Rq(1, 1, t, Q) *
                                            Rq(1, 1, l, Q) * Rq(1, 1, j, Q);
                                 }
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "rv-4.4";
        e.source = "(4.4)";
        e.statement =
            "sum_i t^i q^T_i (z)_i/(q)_i = (z)_inf (-tq)_inf sum_j "
            "z^j/((q)_j (-tq)_j)";
        e.mode = VerifyMode::truncated;
        e.region = [](int64_t Q) {
            Caps c = Caps::at(Q);
            c.p[static_cast<int>(Param::z)] = 8;
            return c;
        };
        e.notes = "z-degree is unbounded at fixed q-order; compared under a "
                  "z cap (default 8)";
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         int zc = caps.p[static_cast<int>(Param::z)];
                         if (zc < 0)
                             throw SeriesError("rv-4.4 needs a cap on z");
                         if (s == Side::lhs) {
                             Series acc(caps);
                             for (int i = 0; T(i) <= Q; ++i)
                                 acc += term(1, mt(i) * qpow(T(i))) *
                                        P(1, mz(1), 1, i) * Rq(1, 1, i, Q);
                             return acc;
                         }
                         Series inner(caps);
                         for (int j = 0; j <= zc; ++j)
                             inner += term(1, mz(j)) * Rq(1, 1, j, Q) *
                                      R(-1, mt(1) * qpow(1), 1, j, Q);
                         Series z_inf = restrict_caps(
                             (one() - Series::variable(Param::z)) *
                                 Pinf(1, mz(1) * qpow(1), 1, Q),
                             caps);
                         return restrict_caps(
                             z_inf * Pinf(-1, mt(1) * qpow(1), 1, Q) * inner,
                             caps);
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "sylvester-4.5";
        e.source = "(4.5)";
        e.statement =
            "sum_i q^T_i (-c)_i/(q)_i = prod_m (1+q^m)(1+c q^(2m-1))";
        e.mode = VerifyMode::truncated;
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         if (s == Side::lhs) {
                             Series acc = capped_sum_start(Q);
                             for (int i = 0; T(i) <= Q; ++i)
                                 acc += qp(T(i)) * P(-1, mc(1), 1, i) *
                                        Rq(1, 1, i, Q);
                             return acc;
                         }
                         return Pinf(-1, qpow(1), 1, Q) *
                                Pinf(-1, mc(1) * qpow(1), 2, Q);
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "symmetry-4.7";
        e.source = "Rmk 4.7";
        e.statement =
            "the unified left side is symmetric under swapping a and b";
        e.mode = VerifyMode::truncated;
        e.checks = {{"", [](Side s, const Assignment&, const Caps& caps) {
                         int64_t Q = need_q(caps);
                         return s == Side::lhs
                                    ? unified_lhs(Q, Param::a, Param::b)
                                    : unified_lhs(Q, Param::b, Param::a);
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "finite-schur-5.1";
        e.source = "Thm 5.1";
        e.statement =
            "sum_i a^i q^T_i (-(c/a)q)_i (-bq^(i+1))_(L-i) [M,i] = sum "
            "a^i b^j c^k q^(T_(i+j+k)+T_k) [M-i,k][M,i][L-i-k,j]";
        e.mode = VerifyMode::exact;
        e.param_names = {"L", "M"};
        e.defaults = {{"L", 6}, {"M", 5}};
        e.domain = [](const Assignment& a) {
            return get(a, "M") <= get(a, "L");
        };
        e.notes = "exact for 0 <= M <= L; other integer pairs need "
                  "negative-length Pochhammer conventions (out of scope)";
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int L = get(a, "L"), M = get(a, "M");
                         Series acc;
                         if (s == Side::lhs) {
                             for (int i = 0; i <= M; ++i)
                                 acc += qp(T(i)) * a_fold(i) *
                                        P(-1, mb(1) * qpow(i + 1), 1, L - i) *
                                        bin(M, i);
                             return acc;
                         }
                         for (int i = 0; i <= M; ++i)
                             for (int k = 0; k <= M - i; ++k)
                                 for (int j = 0; j <= L - i - k; ++j)
                                     acc += term(1, ma(i) * mb(j) * mc(k) *
                                                        qpow(T(i + j + k) +
                                                             T(k))) *
                                            bin(M - i, k) * bin(M, i) *
                                            bin(L - i - k, j);
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "rhs-form-5.4";
        e.source = "(5.4)";
        e.statement =
            "the symmetric rewriting [M'-(i+j+k),k][M'-(j+k),i][L-(i+k),j] "
            "with M' = M+j+k reproduces the Thm 5.1 right side";
        e.mode = VerifyMode::exact;
        e.param_names = {"L", "M"};
        e.defaults = {{"L", 6}, {"M", 5}};
        e.domain = [](const Assignment& a) {
            return get(a, "M") <= get(a, "L");
        };
        e.notes = "faithfulness check of the printed rewriting; both sides "
                  "are evaluated from their own printed index expressions";
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int L = get(a, "L"), M = get(a, "M");
                         Series acc;
                         for (int i = 0; i <= M; ++i)
                             for (int k = 0; k <= M - i; ++k)
                                 for (int j = 0; j <= L - i - k; ++j) {
                                     Series w =
                                         term(1, ma(i) * mb(j) * mc(k) *
                                                     qpow(T(i + j + k) + T(k)));
                                     if (s == Side::lhs) {
                                         int Mp = M + j + k;
                                         acc += w *
                                                bin(Mp - (i + j + k), k) *
                                                bin(Mp - (j + k), i) *
                                                bin(L - (i + k), j);
                                     } else {
                                         acc += w * bin(M - i, k) * bin(M, i) *
                                                bin(L - i - k, j);
                                     }
                                 }
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "finite-lebesgue-5.4c";
        e.source = "Cor 5.4";
        e.statement =
            "sum_i q^T_i (-cq)_i [M,i] = sum_(i,k) c^k q^(T_i+2T_k+ik) "
            "[M-i,k][M,i]";
        e.mode = VerifyMode::exact;
        e.param_names = {"M"};
        e.defaults = {{"M", 6}};
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int M = get(a, "M");
                         if (s == Side::lhs) return finite_lebesgue_lhs(M);
                         Series acc;
                         for (int i = 0; i <= M; ++i)
                             for (int k = 0; k <= M - i; ++k)
                                 acc += term(1, mc(k) * qpow(T(i) + 2 * T(k) +
                                                             int64_t(i) * k)) *
                                        bin(M - i, k) * bin(M, i);
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "ab-key-5.6";
        e.source = "(5.6)";
        e.statement =
            "q^(T_i+T_j) [L,j][M-j,i] = sum_k q^(T_(i+j-k)+T_k) "
            "[M-i-j+k,k][M-j,i-k][L-i,j-k]";
        e.mode = VerifyMode::exact;
        e.param_names = {"L", "M", "i", "j"};
        e.defaults = {{"L", 6}, {"M", 5}, {"i", 2}, {"j", 2}};
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int L = get(a, "L"), M = get(a, "M");
                         int i = get(a, "i"), j = get(a, "j");
                         if (s == Side::lhs)
                             return qp(T(i) + T(j)) * bin(L, j) *
                                    bin(M - j, i);
                         Series acc;
                         for (int k = 0; k <= std::min(i, j); ++k)
                             acc += qp(T(i + j - k) + T(k)) *
                                    bin(M - i - j + k, k) * bin(M - j, i - k) *
                                    bin(L - i, j - k);
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "schur-prod-5.7";
        e.source = "(5.7)";
        e.statement =
            "(-aq)_M (-bq)_L = sum a^(i'+k) b^(j'+k) q^(T_(i'+j'+k)+T_k) "
            "[M-i',k][M,i'][L-i'-k,j']";
        e.mode = VerifyMode::exact;
        e.param_names = {"L", "M"};
        e.defaults = {{"L", 6}, {"M", 5}};
        e.domain = [](const Assignment& a) {
            return get(a, "M") <= get(a, "L");
        };
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int L = get(a, "L"), M = get(a, "M");
                         if (s == Side::lhs)
                             return P(-1, ma(1) * qpow(1), 1, M) *
                                    P(-1, mb(1) * qpow(1), 1, L);
                         Series acc;
                         for (int i = 0; i <= M; ++i)
                             for (int k = 0; k <= M - i; ++k)
                                 for (int j = 0; j <= L - i - k; ++j)
                                     acc += term(1, ma(i + k) * mb(j + k) *
                                                        qpow(T(i + j + k) +
                                                             T(k))) *
                                            bin(M - i, k) * bin(M, i) *
                                            bin(L - i - k, j);
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "coeff-5.8";
        e.source = "(5.8)";
        e.statement =
            "sum_k q^(T_(i+j-k)+T_k) [M-i+k,k][M,i-k][L-i,j-k] = "
            "q^(T_i+T_j) [L,j][M,i]";
        e.mode = VerifyMode::exact;
        e.param_names = {"L", "M", "i", "j"};
        e.defaults = {{"L", 6}, {"M", 5}, {"i", 2}, {"j", 2}};
        e.checks = {{"", [](Side s, const Assignment& a, const Caps&) {
                         int L = get(a, "L"), M = get(a, "M");
                         int i = get(a, "i"), j = get(a, "j");
                         if (s == Side::rhs)
                             return qp(T(i) + T(j)) * bin(L, j) * bin(M, i);
                         Series acc;
                         for (int k = 0; k <= std::min(i, j); ++k)
                             acc += qp(T(i + j - k) + T(k)) *
                                    bin(M - i + k, k) * bin(M, i - k) *
                                    bin(L - i, j - k);
                         return acc;
                     }}};
        es.push_back(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "trinomial-5.9";
        e.source = "Rmk 5.9";
        e.statement =
            "b=0 gives sum_i a^i q^T_i (-(c/a)q)_i [M,i] = sum a^i c^k "
            "q^(T_(i+k)+T_k) [M;i,k,M-i-k]; at q=1 both are (1+a+c)^M";
        e.mode = VerifyMode::exact;
        e.param_names = {"M"};
        e.defaults = {{"M", 5}};
        e.sweep = [] {
            std::vector<Assignment> out;
            for (int M = 0; M <= 8; ++M) out.push_back({{"M", M}});
            return out;
        };
        auto multinomial_side = [](int M) {
            Series acc;
            for (int i = 0; i <= M; ++i)
                for (int k = 0; k + i <= M; ++k)
                    acc += term(1, ma(i) * mc(k) * qpow(T(i + k) + T(k))) *
                           q_multinomial(M, {i, k});
            return acc;
        };
        e.checks = {
            {"q-level",
             [multinomial_side](Side s, const Assignment& a, const Caps&) {
                 int M = get(a, "M");
                 if (s == Side::rhs) return multinomial_side(M);
                 Series acc;
                 for (int i = 0; i <= M; ++i)
                     acc += qp(T(i)) * a_fold(i) * bin(M, i);
                 return acc;
             }},
            {"q->1 trinomial",
             [multinomial_side](Side s, const Assignment& a, const Caps&) {
                 int M = get(a, "M");
                 if (s == Side::lhs) return eval_q1(multinomial_side(M));
                 Series tri = one() + Series::variable(Param::a) +
                              Series::variable(Param::c);
                 Series acc = one();
                 for (int i = 0; i < M; ++i) acc = acc * tri;
                 return acc;
             }}};
        es.push_back(std::move(e));
    }

    return es;
}

}  // namespace qid::bd
