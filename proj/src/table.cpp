#include "tri/table.hpp"

namespace tri {

void PointTable::validate() const {
    const std::size_t n = points_.size();
    if (n < 3) throw TooFewPoints("need at least 3 points");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points_[i] == points_[j]) throw DuplicatePoint(i, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (orient(points_[i], points_[j], points_[k]) ==
                    Orientation::Collinear) {
                    throw CollinearTriple(i, j, k);
                }
            }
        }
    }
}

}  // namespace tri
