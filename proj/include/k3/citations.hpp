#pragma once

#include <string_view>

// Anchors attached to reports and derived facts. Each names the statement a
// check or rule encodes, with a short literal excerpt of it.
namespace k3::cite {

inline constexpr std::string_view kHyperbolicPlane = "K3 surfaces: \"U is the hyperbolic plane\"";
inline constexpr std::string_view kE8 =
    "K3 surfaces: \"E_8 is the unique even unimodular positive defined lattice of rank 8\"";
inline constexpr std::string_view kTwist = "K3 surfaces: \"b_{L(m)}(x,y) = m(b_{L}(x,y))\"";
inline constexpr std::string_view kH2Model = "K3 surfaces: \"H^2(X,Z) = U^3 + E_8(-1) + E_8(-1)\"";
inline constexpr std::string_view kSwapAction = "K3 surfaces: \"i^*(u,x,y)=(u,y,x)\"";
inline constexpr std::string_view kInvariantSublattice = "K3 surfaces: \"H^2(X,Z)^{i} = U^3 + E_8(-2)\"";
inline constexpr std::string_view kAntiInvariant = "K3 surfaces: \"(H^2(X,Z)^i)^{perp} = E_8(-2)\"";
inline constexpr std::string_view kB2 = "K3 surfaces: \"dim H^2(X) = b_2(X) =22\"";
inline constexpr std::string_view kLemma2Balance = "Lemma 2: \"e(X) +t +2 +2k = 2e(Y)\"";
inline constexpr std::string_view kLemma2Conclusion = "Lemma 2: \"Therefore rho(X) = rho(Y) and t=6\"";
inline constexpr std::string_view kNsTrace =
    "Theorem 3 proof: \"the trace of the action of i on NS(X) (x) C equals rho-16\"";
inline constexpr std::string_view kNikulinRank = "K3 surfaces: \"has rank rho(X) >= 9\"";
inline constexpr std::string_view kEvenSets = "K3 surfaces: \"by [N 1], k =0,8,16\"";
inline constexpr std::string_view kEvenSetKummer = "K3 surfaces: \"If k =16 then X is birational to an abelian surface\"";
inline constexpr std::string_view kEvenSetK3 = "K3 surfaces: \"If k =8 then X is a K3 surface\"";
inline constexpr std::string_view kKummerT2 = "K3 surfaces: \"t_2(A) = t_2(X) = t_2(Y)\"";

inline constexpr std::string_view kLambda2d = "Theorem 6: \"Lambda_{2d} = Z L + E_8(-2)\"";
inline constexpr std::string_view kNsOddBranch = "Theorem 6: \"if L^2 = 2 mod 4, we have Lambda_{2d}=NS(X)\"";
inline constexpr std::string_view kNsEvenBranch =
    "Theorem 6: \"If L^2 = 0 mod 4 we have either NS(X) = Lambda_{2d} or NS(X) = Lambda_{bar 2d}\"";
inline constexpr std::string_view kPrimitive = "Theorem 6: \"E_8(-2) is a primitive sublattice\"";
inline constexpr std::string_view kGlueExample = "Example (ii): \"E_1 = (L+v)/2, with v in E_8(-2), such that v^2 =-4\"";

inline constexpr std::string_view kChowKunneth =
    "Theorem 3 proof: \"h(X) = 1 + h^{alg}_2(X) + t_2(X) + L^2 = 1 + L^{rho} + t_2(X) + L^2\"";
inline constexpr std::string_view kBlowup = "Theorem 3 proof: \"h(tilde X) = ... = h(X) + L^{+8}\"";
inline constexpr std::string_view kBirationalT2 = "Involutions: \"t_2(-) is a birational invariant\"";
inline constexpr std::string_view kNullSummand = "Theorem 3 proof: \"By [Ki 7.3] N=0\"";
inline constexpr std::string_view kAlphaSquared = "Proposition 1 (i): \"(alpha)^2 =[xi]\"";
inline constexpr std::string_view kPush = "Proposition 1 (i): \"f_*([xi]) = f_*(alpha) = 2 [eta]\"";
inline constexpr std::string_view kPull = "Proposition 1 (ii): \"f^*([eta]) = [xi] +alpha\"";
inline constexpr std::string_view kPullPush = "Proposition 1 (ii): \"f^*(f_*([xi]) = 2[xi] +2alpha\"";
inline constexpr std::string_view kIdempotent = "Proposition 1 (iii): \"p o p =p\"";
inline constexpr std::string_view kValenceCompose = "Definition 1: \"v(T o T') = -v(T) . v(T')\"";
inline constexpr std::string_view kProjectorValence =
    "Definition 1: \"if p is a projector ... then v(p) is either 0 or -1\"";
inline constexpr std::string_view kTheorem1 = "Theorem 1: \"t_2(Y) =0 <=> v(Gamma_sigma) =1\"";
inline constexpr std::string_view kRemark1 = "Remark 1: \"the correspondence Delta_X has 2 different valences\"";
inline constexpr std::string_view kCorollary1 =
    "Corollary 1 (i): \"theta : t_2(X) -> t_2(Y) is the projection onto a direct summand\"";

inline constexpr std::string_view kWeierstrass = "Theorem 7 proof: \"X : y^2=x(x^2+a(t)x +b(t))\"";
inline constexpr std::string_view kI1Fibers = "Theorem 7 proof: \"8 singular fibers of type I_1\"";
inline constexpr std::string_view kI2Fibers = "Theorem 7 proof: \"8 singular fibers of type I_2\"";
inline constexpr std::string_view kQuotientPrinted = "Theorem 7 proof: \"Y : y^2 = x(x^2- 2a(t)x+9a(t)^2-4b(t)\"";
inline constexpr std::string_view kRho10 = "Remark 4: \"NS(X) has rank rho(X)=10\"";
inline constexpr std::string_view kDimT12 = "Remark 4: \"dim T_{X,Q}=12 is even\"";
inline constexpr std::string_view kEuler24 = "Lemma 2 proof: \"e(X) =e(Y) =24\"";

inline constexpr std::string_view kTheorem2 =
    "Theorem 2: \"the motive h(X) in M_rat(C) is finite dimensional\"";
inline constexpr std::string_view kTheorem3 = "Theorem 3: \"then h(X) = h(Y)\"";
inline constexpr std::string_view kTheorem4 = "Theorem 4: \"i acts as the identity on A_0(X)_0\"";
inline constexpr std::string_view kTheorem5 = "Theorem 5: \"where F_n in P^3 is the Fermat surface\"";
inline constexpr std::string_view kTheorem5Degree = "Theorem 5: \"n =m if X is unimodular and n = 2m\"";
inline constexpr std::string_view kTheorem5Precondition = "Theorem 5: \"m =|H_X| != 3\"";
inline constexpr std::string_view kCorollary2 = "Corollary 2: \"rho(X) = 2, 4, 6, 10, 12, 16, 18, 20.\"";
inline constexpr std::string_view kRemark3 =
    "Remark 3: \"the quotient surface Y=X/<sigma> is an Enriques surface\"";
inline constexpr std::string_view kTheorem7 = "Theorem 7: \"theta : t_2(X) -~-> t_2(Y)\"";
inline constexpr std::string_view kThreeQuadrics = "Example (iii): \"i acts trivially on A_0(X)\"";
inline constexpr std::string_view kK3Invariants = "K3 surfaces: \"1 <= rho <= 20\"";

}  // namespace k3::cite
