#pragma once

#include <cstdint>
#include <vector>

#include "zdb/zdb_function.hpp"

namespace zdb {

/// 2-cyclotomic cosets modulo n = 2^m - 1.
struct CosetTable {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> leaders;    // ascending; leaders[0] = 0
    std::vector<std::uint32_t> leader_of;  // length n
    std::vector<std::uint32_t> size_of;    // coset size, indexed by element
};

/// Classes B u (-B) of the 2-cyclotomic cosets modulo n = 2^m - 1.
struct PairedCosetTable {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> leaders;
    std::vector<std::uint32_t> leader_of;
};

/// Throws NotPrime, TooLarge (n above 2^20).
CosetTable build_coset_table(std::uint32_t m);
/// Throws NotPrime, EvenPrimeNotAllowed, TooLarge.
PairedCosetTable build_paired_coset_table(std::uint32_t m);

/// (2^m - 1, (2^m + m - 2)/m, m - 1) with tau = {1, m, ..., m}.
ZdbParams predicted_coset_params(std::uint32_t m);
/// (2^m - 1, (2^(m-1) + m - 1)/m, 2m - 1) with tau = {1, 2m, ..., 2m}.
ZdbParams predicted_pair_coset_params(std::uint32_t m);

/// x -> coset leader of x, labels ranked by ascending leader.
ZdbFunction construct_coset_zdb(std::uint32_t m);
/// x -> leader of the class B u (-B) containing x, ranked likewise.
ZdbFunction construct_pair_coset_zdb(std::uint32_t m);

}  // namespace zdb
