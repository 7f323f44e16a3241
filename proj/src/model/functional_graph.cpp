#include <stdexcept>
#include <string>

#include "rmlab/model.hpp"
#include "rmlab/union_find.hpp"

namespace rmlab {

std::size_t functional_graph_components(const BitMatrix& m) {
    if (m.n_rows() != m.n_cols()) {
        throw std::invalid_argument("functional_graph_components: expected an n x n (r = 1) matrix");
    }
    const std::size_t n = m.n_rows();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t weight = 0;
        std::size_t image = i;
        for (std::size_t row = 0; row < n; ++row) {
            if (!m.get(row, i)) {
                continue;
            }
            ++weight;
            if (row != i) {
                image = row;
            }
        }
        // weight 0: the random entry hit the diagonal (loop); weight 2: diagonal + f(i).
        const bool loop = weight == 0;
        const bool edge = weight == 2 && m.get(i, i);
        if (!loop && !edge) {
            throw std::invalid_argument("functional_graph_components: column " + std::to_string(i) +
                                        " is not an s = 2 column");
        }
        uf.unite(i, image);
    }
    return uf.components();
}

}  // namespace rmlab
