#include "tverberg/certificate.hpp"

#include <cstddef>
#include <sstream>

namespace tverberg {

std::optional<std::string> certificate_error(const PointSet& points, const TverbergCertificate& certificate) {
  const Partition& partition = certificate.partition;
  if (partition.element_count() != points.size())
    return "certificate: partition element count differs from the point set size";
  if (partition.block_count() < 1) return "certificate: no blocks";
  if (certificate.witness.dimension() != points.dimension())
    return "certificate: witness dimension differs from the point set dimension";
  if (certificate.coefficients.size() != static_cast<std::size_t>(partition.block_count()))
    return "certificate: one coefficient list required per block";

  for (int b = 0; b < partition.block_count(); ++b) {
    const auto& block = partition.block(b);
    const auto& lambda = certificate.coefficients[static_cast<std::size_t>(b)];
    if (lambda.size() != block.size()) {
      std::ostringstream message;
      message << "certificate: block " << b << " has " << block.size() << " points but "
              << lambda.size() << " coefficients";
      return message.str();
    }
    Rational total = 0;
    Point combination = Point::zero(points.dimension());
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (lambda[k].sign() < 0) {
        std::ostringstream message;
        message << "certificate: negative coefficient " << lambda[k] << " in block " << b;
        return message.str();
      }
      total += lambda[k];
      combination += lambda[k] * points[block[k]];
    }
    if (total != Rational(1)) {
      std::ostringstream message;
      message << "certificate: coefficients of block " << b << " sum to " << total << ", not 1";
      return message.str();
    }
    if (combination != certificate.witness) {
      std::ostringstream message;
      message << "certificate: block " << b << " combination " << combination
              << " differs from the witness " << certificate.witness;
      return message.str();
    }
  }
  return std::nullopt;
}

}  // namespace tverberg
