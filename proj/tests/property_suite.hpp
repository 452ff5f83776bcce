#pragma once

#include <functional>
#include <string>
#include <vector>

namespace props {

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances >= 200; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

PropertyResult inverse_identity();
PropertyResult smith_form();
PropertyResult definiteness();
PropertyResult kernel_generator();
PropertyResult cfrac_round_trip();
PropertyResult park_determinant();
PropertyResult square_shift();
PropertyResult full_path_square();
PropertyResult d_conjugation();
PropertyResult d_direct_sum();
PropertyResult box_stabilization();
PropertyResult owens_strle_park();
PropertyResult grading_shift_sign();
PropertyResult goeritz_determinant();
PropertyResult lens_relation();

struct NamedProperty {
  const char* name;
  PropertyResult (*run)();
  bool acceptance;  // part of the acceptance property gate
};

const std::vector<NamedProperty>& all_properties();

}  // namespace props
