#pragma once

#include <memory>
#include <vector>

#include "grouplab/subgroup.hpp"

namespace grouplab {

// G/N realized as the right-multiplication action of G on the right cosets
// of N. The epimorphism is materialized as an element-index map, and images
// of subgroups A compute AN/N.
struct QuotientMap {
  std::shared_ptr<const GroupContext> quotient;
  std::vector<int> elem_image;  // ambient element index -> quotient index
  int index = 0;                // |G : N|

  SubgroupSet image_of(const SubgroupSet& sub) const;
};

// Throws when N is not normal in the ambient group. N equal to the whole
// group yields the degree-1 trivial quotient.
QuotientMap quotient_group(const SubgroupSet& N);

}  // namespace grouplab
