#include "laxforge/matrix.hpp"

namespace laxforge {

ExactMatrix exact_identity(std::size_t n) { return ExactMatrix::identity(n, Scalar(1)); }

ExactMatrix pauli1() {
    ExactMatrix m(2, 2);
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(1);
    return m;
}

ExactMatrix pauli2() {
    ExactMatrix m(2, 2);
    m.at(0, 1) = -Scalar::i();
    m.at(1, 0) = Scalar::i();
    return m;
}

ExactMatrix pauli3() {
    ExactMatrix m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = Scalar(-1);
    return m;
}

ExactMatrix exact_pow(const ExactMatrix& m, unsigned k) {
    ExactMatrix acc = exact_identity(m.rows());
    for (unsigned j = 0; j < k; ++j) acc = acc * m;
    return acc;
}

}  // namespace laxforge
