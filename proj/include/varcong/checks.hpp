#pragma once

#include "varcong/congruence.hpp"
#include "varcong/report.hpp"

namespace varcong {

/// Transfer behavior of congruences along a sandwich pair (b, c), monoid
/// indices throughout.  The four items:
///   1. if b rho is L-related to b1 rho and c rho is R-related to c1 rho in
///      (S/rho)^1, the transfers by (b, c) and (b1, c1) coincide;
///   2. rho is contained in its transfer;
///   3. the transfer equals rho itself iff b rho is left cancellable and
///      c rho right cancellable over S/rho;
///   4. transfer is monotone (rho <= sigma gives rho_bc <= sigma_bc), and
///      when b sigma, c sigma are cancellable over S/sigma the containment
///      transfers back as well.
/// An adjoined identity of S^1 maps to the identity of (S/rho)^1.
CheckReport check_simple_theorem(const Congruence& rho, const Congruence& sigma,
                                 const MonoidView& m, element b, element c,
                                 element b1, element c1);

/// For S/rho inverse: the right transfers by b and by c coincide iff b rho
/// and c rho are R-related in (S/rho)^1; dually on the left with L.  Throws
/// PreconditionFailed when S/rho is not inverse.
CheckReport check_inverse_R_proposition(const Congruence& rho,
                                        const MonoidView& m, element b,
                                        element c);

/// Lattice behavior of the transfer rho -> rho_bc:
///   1. meets are preserved;
///   2. the join of transfers is contained in the transfer of the join;
///   3. with b and c regular in S^1, item 2 is an equality;
///   4. with b S c = S, the transfer is injective (checked pairwise on the
///      given rho, sigma).
CheckReport check_beautiful_theorem(const Congruence& rho,
                                    const Congruence& sigma,
                                    const MonoidView& m, element b, element c);

/// For S/rho inverse: the transfer by (b, c) collapses to the conjugate
/// transfer by a = c b exactly when u x v = (v' v u) x (v u u') holds for
/// all x in S/rho, where u = b rho, v = c rho and primes are the unique
/// inverses in (S/rho)^1.  Also checks the unconditional containment
/// rho_bc <= rho_a.  Throws PreconditionFailed when S/rho is not inverse.
CheckReport check_main_equation_proposition(const Congruence& rho,
                                            const MonoidView& m, element b,
                                            element c);

/// The variant of S by c b, modulo the transfer of rho, against the sandwich
/// image b S c modulo rho restricted: x -> (b x c) rho should be a surjective
/// homomorphism whose kernel is the transfer, hence induce an isomorphism.
/// Every piece is checked extensionally.
CheckReport check_quotient_isomorphism_bc(const Congruence& rho,
                                          const MonoidView& m, element b,
                                          element c);

/// Same shape for the conjugate transfer: the variant of S by a, modulo
/// rho_a, against a S a modulo rho restricted, along x -> (a x a) rho.
CheckReport check_quotient_isomorphism_a(const Congruence& rho,
                                         const MonoidView& m, element a);

}  // namespace varcong
