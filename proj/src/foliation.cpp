#include "nambu/foliation.hpp"

#include "nambu/errors.hpp"
#include "nambu/ideal.hpp"
#include "nambu/integrability.hpp"

namespace nambu {

MultiVec wedge_generators(std::span<const MultiVec> fields) {
    if (fields.empty()) throw HypothesisError("wedge_generators: no generators");
    MultiVec pi = fields[0];
    if (pi.degree() != 1) throw HypothesisError("wedge_generators: generators must be vector fields");
    for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].degree() != 1 || fields[i].nvars() != pi.nvars())
            throw HypothesisError("wedge_generators: generators must be vector fields on the same space");
        pi = wedge(pi, fields[i]);
    }
    if (pi.is_zero())
        throw HypothesisError("wedge_generators: generators are dependent (zero wedge)");
    return pi;
}

AssociatedNambu associated_nambu(std::span<const MultiVec> fields,
                                 const std::optional<Poly>& sing_locus_f) {
    const MultiVec pi = wedge_generators(fields);
    const int n = pi.nvars();

    std::vector<Poly> coeffs;
    for (const auto& [idx, c] : pi.comps()) coeffs.push_back(c);
    AssociatedNambu out;
    out.cofactor_h = content_gcd(coeffs);

    MultiVec primitive(n, pi.degree());
    for (const auto& [idx, c] : pi.comps())
        primitive.add_component(idx, divexact(c, out.cofactor_h));

    PolyIdeal coeff_ideal;
    for (const auto& [idx, c] : primitive.comps()) coeff_ideal.generators.push_back(c);
    const VarietyCodim vc = variety_codim(coeff_ideal);
    out.sing_codim_lambda = vc.codim;
    if (!vc.empty_variety && vc.codim < 2)
        throw HypothesisError("associated_nambu: primitive wedge still vanishes in codimension < 2");

    if (sing_locus_f) {
        if (sing_locus_f->is_zero())
            throw HypothesisError("associated_nambu: zero singular locus equation");
        out.codim1_correction_s = squarefree_part(*sing_locus_f);
        out.lambda = primitive * out.codim1_correction_s;
    } else {
        out.codim1_correction_s = Poly::constant(n, Rat(1));
        out.lambda = primitive;
    }

    const IntegrabilityVerdict verdict = is_nambu(out.lambda);
    if (!verdict.integrable)
        throw HypothesisError(
            "associated_nambu: wedge is not a Nambu tensor; the generators do not span "
            "an involutive distribution");
    return out;
}

CitCertificate is_cit(const MultiVec& x, const MultiVec& lambda) {
    if (lambda.is_zero()) throw HypothesisError("is_cit: zero tensor");
    if (x.degree() != 1) throw HypothesisError("is_cit: first argument must be a vector field");

    CitCertificate cert;
    MultiVec tangency = wedge(x, lambda);
    if (lambda.degree() + 1 <= lambda.nvars() && !tangency.is_zero()) {
        cert.obstruction = tangency;
        return cert;
    }

    const MultiVec lie = lie_derivative(x, lambda);
    // solve L_X Lambda = g Lambda against one nonzero coefficient, then verify
    const auto& [ref_idx, ref_coeff] = lambda.comps().front();
    Poly g(lambda.nvars());
    const Poly lie_ref = lie.coeff(ref_idx);
    if (!lie_ref.is_zero()) {
        try {
            g = divexact(lie_ref, ref_coeff);
        } catch (const HypothesisError&) {
            cert.obstruction = lie;
            return cert;
        }
    }
    MultiVec residual = lie - lambda * g;
    if (!residual.is_zero()) {
        cert.obstruction = residual;
        return cert;
    }
    cert.is_cit = true;
    cert.conformal_factor_g = g;
    return cert;
}

} // namespace nambu
