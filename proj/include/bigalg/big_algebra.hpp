#pragma once

#include "bigalg/kirillov.hpp"
#include "bigalg/qpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace bigalg {

/// Matrix over Q[c_2..c_n]: a Kirillov element restricted to the companion section.
struct SectionOperator {
    std::string label;
    int degree = 0;
    PolyMatrix matrix;

    QMatrix evaluate(const QVector& cvals) const;
};

SectionOperator restrict_to_section(const KirillovElement& a);
QMatrix evaluate_at(const SectionOperator& op, const QVector& cvals);
/// c_k * Id on the section.
SectionOperator invariant_section(int n, std::size_t dim, int k);

/// Name of D^i(c_k): M{k-1} for i = 1, N1 for sl_3 D^2(c_3), otherwise B{i}_{k-i}.
std::string generator_label(int n, int i, int k);

struct CalibratedGenerator {
    int i = 0;
    int k = 0;
    Rational scalar;
    KirillovElement element;  // scaled
    SectionOperator section;  // scaled
};

struct CalibrationCheck {
    std::string name;
    Rational expected;
    Rational actual;
    bool passed = false;
};

struct Calibration {
    RepPtr rep;
    std::vector<CalibratedGenerator> generators;
    std::vector<CalibrationCheck> checks;

    std::vector<SectionOperator> sections() const;
    const CalibratedGenerator& get(const std::string& label) const;
    bool ok() const;
};

/// Rescales G_{i,k} = D^i(c_k Id) by (-4n)^i and checks the highest-weight anchors at h.
/// Throws on a generator that vanishes although its anchor value is nonzero.
Calibration calibrate_generators(const RepPtr& rep);

/// Polynomial ring in generator labels followed by c_2..c_n, with weighted degrees.
struct PresentationRing {
    VarSetPtr vars;
    std::vector<int> weights;
    std::size_t num_generators = 0;
    int n = 0;
};

PresentationRing presentation_ring(const std::vector<SectionOperator>& gens, int n);
/// Monomials of weighted degree d, first variable dominant (M1^d leads).
std::vector<Monomial> monomials_of_degree(const PresentationRing& ring, int d);

/// Substitutes section operators for generator names; memoizes monomials.
class RelationEvaluator {
public:
    RelationEvaluator(const PresentationRing& ring, const std::vector<SectionOperator>& gens, std::size_t dim);
    const PolyMatrix& monomial(const Monomial& m);
    PolyMatrix evaluate(const MultiPoly& relation);

private:
    PresentationRing ring_;
    std::vector<SectionOperator> gens_;
    std::size_t dim_;
    VarSetPtr cvars_;
    std::map<Monomial, PolyMatrix> memo_;
};

struct HilbertSeries {
    QPolynomial numerator;            // fiber at e, graded by ad rho(h) weight / 2
    QPolynomial formula;              // product over positive roots
    std::vector<int> denominator_exponents;
    std::size_t fiber_dimension = 0;
    std::size_t rep_dimension = 0;
    bool homogeneous = true;          // each generator value at e sits in one ad-weight
    bool agree = false;
};

HilbertSeries hilbert_series(const RepPtr& rep, const std::vector<SectionOperator>& gens);
/// Product formula prod (1 - q^{(mu+rho,a)}) / (1 - q^{(rho,a)}).
QPolynomial hilbert_numerator_formula(const Weight& mu);

/// Minimal relations up to max_degree by degree-truncated kernels; default cutoff 2n.
std::vector<MultiPoly> derive_relations(const PresentationRing& ring, const std::vector<SectionOperator>& gens,
                                        std::size_t dim, int max_degree);

struct RelationCheck {
    std::string relation;
    bool zero = false;
    std::string first_nonzero;  // "entry (i,j): poly" when not zero
};

struct PresentationReport {
    std::vector<RelationCheck> relations;
    std::vector<std::size_t> ideal_dims;      // from the given relations, per degree 0..max
    std::vector<std::size_t> kernel_dims;     // true relation space, per degree
    bool annihilates = false;
    bool graded_dims_match = false;
    bool passed() const { return annihilates && graded_dims_match; }
};

PresentationReport verify_presentation(const PresentationRing& ring, const std::vector<SectionOperator>& gens,
                                       std::size_t dim, const std::vector<MultiPoly>& relations, int max_degree);

/// Dimension of the degree-d part of the ideal spanned by monomial multiples of relations.
std::size_t ideal_dimension(const PresentationRing& ring, const std::vector<MultiPoly>& relations, int d);
/// Dimension of the space of degree-d relations (kernel of monomial evaluation).
std::size_t relation_space_dimension(const PresentationRing& ring, RelationEvaluator& ev, int d);

struct PointCheck {
    QVector cvals;
    std::size_t span_dimension = 0;
    bool cyclic = false;
    bool simple = false;
};

struct FreenessReport {
    std::vector<PointCheck> random_points;
    PointCheck nilpotent_point;  // c = 0; simplicity there is informational
    std::size_t rep_dimension = 0;
    bool passed() const;
};

FreenessReport freeness_and_rank_check(const RepPtr& rep, const std::vector<SectionOperator>& gens, std::uint64_t seed,
                                       int points = 3);

/// Span of all products of the given matrices (unital algebra they generate).
std::vector<QVector> generated_algebra(const std::vector<QMatrix>& gens, std::size_t dim);

}  // namespace bigalg
