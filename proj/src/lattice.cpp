#include "fanoq/lattice.hpp"

namespace fanoq {

ExtendedGcd extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_p = 1, p = 0;
    Int old_q = 0, q = 1;
    while (r != 0) {
        Int quot = old_r / r;
        Int t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_p - quot * p;
        old_p = p;
        p = t;
        t = old_q - quot * q;
        old_q = q;
        q = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_p = -old_p;
        old_q = -old_q;
    }
    return {old_r, old_p, old_q};
}

IntMatrix integer_kernel(const IntMatrix& A) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    IntMatrix work = A;
    IntMatrix trans = IntMatrix::Identity(cols, cols);

    Eigen::Index rank = 0;
    for (Eigen::Index row = 0; row < rows && rank < cols; ++row) {
        // gcd-eliminate across columns rank..cols-1 until row has one nonzero
        while (true) {
            Eigen::Index best = -1;
            for (Eigen::Index c = rank; c < cols; ++c) {
                if (work(row, c) == 0) continue;
                if (best < 0 || std::abs(work(row, c)) < std::abs(work(row, best))) best = c;
            }
            if (best < 0) break;
            bool others = false;
            for (Eigen::Index c = rank; c < cols; ++c) {
                if (c == best || work(row, c) == 0) continue;
                Int q = work(row, c) / work(row, best);
                work.col(c) -= q * work.col(best);
                trans.col(c) -= q * trans.col(best);
                others = others || work(row, c) != 0;
            }
            if (!others) {
                work.col(best).swap(work.col(rank));
                trans.col(best).swap(trans.col(rank));
                ++rank;
                break;
            }
        }
    }

    IntMatrix kernel(cols, cols - rank);
    for (Eigen::Index c = rank; c < cols; ++c) {
        IntMatrix::ColXpr col = trans.col(c);
        Int lead = 0;
        for (Eigen::Index i = 0; i < cols && lead == 0; ++i) lead = col(i);
        kernel.col(c - rank) = lead < 0 ? (-col).eval() : col.eval();
    }
    return kernel;
}

}  // namespace fanoq
