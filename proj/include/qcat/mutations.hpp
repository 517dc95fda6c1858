#pragma once

#include <random>
#include <string>

#include "qcat/certificate.hpp"

namespace qcat {

enum class MutationKind {
  outer_k,
  shift_k,
  drop_step,
  duplicate_step,
  hoist_dependent,
  change_horn_face,
  change_attached,
  change_attached_face,
  change_dimension,
  swap_steps,
};

std::string to_string(MutationKind kind);

struct Mutation {
  AnodyneCertificate certificate;
  MutationKind kind;
  /// What verify_certificate must answer; true only for reorders that keep every step's faces available.
  bool expected_valid = false;
};

/// A random corruption of a certificate that verifies.
Mutation random_mutation(const AnodyneCertificate& c, std::mt19937_64& rng);

/// Whether the steps can be replayed in this order, judged only from which ids
/// each step needs and creates.
bool steps_face_closed(const AnodyneCertificate& c);

}  // namespace qcat
