// Tabulated induced vector fields, transcribed term by term. The list is
// kept as written, including entries that disagree with the bracket oracle;
// diff_against_reference_table() reports those.

#include "ksreg/quadratic_poisson.hpp"

namespace ksreg {

const std::vector<std::vector<TableTerm>>& reference_vector_field_table() {
  using G = Gen;
  // clang-format off
  static const std::vector<std::vector<TableTerm>> table{
      // Y_K1
      {{-2, G::L3, G::K2}, {2, G::L2, G::K3}, {-2, G::K3, G::L2}, {2, G::K2, G::L3},
       {-2, G::U2, G::U1}, {2, G::U2, G::U2}, {-2, G::V2, G::V1}, {2, G::V1, G::V2}},
      // Y_K2
      {{2, G::L3, G::K1}, {-2, G::L1, G::K3}, {2, G::K3, G::L1}, {-2, G::K1, G::L3},
       {-2, G::U3, G::U1}, {2, G::U1, G::U3}, {-2, G::V3, G::V1}, {2, G::V1, G::V3}},
      // Y_K3
      {{-2, G::L2, G::K1}, {2, G::L1, G::K2}, {-2, G::K2, G::L1}, {2, G::K1, G::L2},
       {-2, G::U4, G::U1}, {2, G::U1, G::U4}, {-2, G::V4, G::V1}, {2, G::V1, G::V4}},
      // Y_L1
      {{-2, G::K3, G::K2}, {2, G::K2, G::K3}, {-2, G::L3, G::L2}, {2, G::L2, G::L3},
       {-2, G::U4, G::U3}, {2, G::U3, G::U4}, {-2, G::V4, G::V3}, {2, G::V3, G::V4}},
      // Y_L2
      {{2, G::K3, G::K1}, {-2, G::K1, G::K3}, {2, G::L3, G::L1}, {-2, G::L1, G::L3},
       {2, G::U4, G::U2}, {-2, G::U2, G::U4}, {2, G::V4, G::V2}, {-2, G::V2, G::V4}},
      // Y_L3
      {{-2, G::K2, G::K1}, {2, G::K1, G::K2}, {-2, G::L2, G::L1}, {2, G::L1, G::L2},
       {-2, G::U3, G::U2}, {2, G::U2, G::U3}, {-2, G::V3, G::V2}, {2, G::V2, G::V3}},
      // Y_H2
      {{2, G::V1, G::U1}, {2, G::V2, G::U2}, {2, G::V3, G::U3}, {2, G::V4, G::U4},
       {-2, G::U1, G::V1}, {-2, G::U2, G::V2}, {-2, G::U3, G::V3}, {-2, G::U4, G::V4}},
      // Y_Xi
      {},
      // Y_U1
      {{2, G::U2, G::K1}, {2, G::U3, G::K2}, {2, G::U4, G::K3}, {-2, G::V1, G::H2},
       {2, G::K1, G::U2}, {2, G::K2, G::U3}, {2, G::K3, G::U4}, {-2, G::H2, G::V1}},
      // Y_U2
      {{-2, G::U1, G::K1}, {-2, G::U4, G::L2}, {2, G::U3, G::L3}, {-2, G::V2, G::H2},
       {-2, G::K2, G::U1}, {2, G::L1, G::U3}, {-2, G::L2, G::U4}, {-2, G::H2, G::V2}},
      // Y_U3
      {{-2, G::U1, G::K2}, {2, G::U4, G::L1}, {2, G::U2, G::L3}, {-2, G::V3, G::H2},
       {-2, G::K2, G::U1}, {-2, G::L1, G::U2}, {-2, G::V3, G::U4}, {-2, G::H2, G::V4}},
      // Y_U4
      {{-2, G::U1, G::K1}, {-2, G::U3, G::L1}, {2, G::U2, G::L2}, {-2, G::V4, G::H2},
       {-2, G::K3, G::U1}, {2, G::L2, G::U2}, {2, G::V3, G::U3}, {-2, G::H2, G::V4}},
      // Y_V1
      {{2, G::V2, G::K1}, {-2, G::V4, G::L2}, {2, G::V3, G::L3}, {2, G::U2, G::H2},
       {2, G::H2, G::U2}, {2, G::K1, G::V2}, {2, G::K2, G::V3}, {2, G::U4, G::V4}},
      // Y_V2
      {{-2, G::V1, G::K1}, {-2, G::V4, G::L2}, {2, G::V3, G::L3}, {2, G::U2, G::H2},
       {-2, G::H2, G::U2}, {-2, G::K1, G::V1}, {2, G::L3, G::V3}, {-2, G::L2, G::V4}},
      // Y_V3
      {{-2, G::V1, G::K2}, {2, G::V4, G::L1}, {-2, G::V2, G::L3}, {2, G::U3, G::H2},
       {2, G::H2, G::U3}, {-2, G::K2, G::V1}, {-2, G::L3, G::V3}, {2, G::L1, G::V4}},
      // Y_V4
      {{-2, G::V1, G::K3}, {-2, G::V3, G::L1}, {2, G::V2, G::L2}, {2, G::U4, G::H2},
       {2, G::H2, G::U4}, {-2, G::U4, G::V1}, {2, G::L2, G::V2}, {-2, G::L1, G::V3}},
  };
  // clang-format on
  return table;
}

}  // namespace ksreg
