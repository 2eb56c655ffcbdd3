#include "rigidkit/root_system.hpp"

#include <algorithm>
#include <set>

#include "rigidkit/central_extension.hpp"
#include "rigidkit/errors.hpp"
#include "rigidkit/linalg.hpp"

namespace rigidkit {

namespace {

// Coordinates of `target` over the given spanning vectors (not their
// echelonization). NotInSpan if outside.
QVector coordsOverVectors(const std::vector<QVector>& gens, const QVector& target) {
    if (gens.empty()) throw DimensionMismatch("empty generating set");
    Subspace span = Subspace::fromVectors(gens[0].size(), gens);
    auto ech = span.coordinatesOf(target);
    if (!ech) throw NotInSpan("vector is outside the span");
    QMatrix change(span.dim(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        auto cj = span.coordinatesOf(gens[j]);
        for (std::size_t i = 0; i < span.dim(); ++i) change(i, j) = (*cj)[i];
    }
    return change.solve(*ech);
}

std::vector<QMatrix> splitPartsOfAdjoint(const LieAlgebra& l, const AbelianSubalgebra& a) {
    std::vector<QMatrix> splits;
    for (const auto& z : a.generatorCoords())
        splits.push_back(jordanChevalley(l.adjoint(z)).semisimplePart);
    return splits;
}

QVector normalizedConstraint(QVector c) {
    for (const auto& x : c) {
        if (x == 0) continue;
        Rational inv = 1 / abs(x);
        for (auto& y : c) y *= inv;
        break;
    }
    return c;
}

} // namespace

std::vector<Functional> RestrictedRootSystem::nonzeroFunctionals() const {
    std::vector<Functional> out;
    for (const auto& [f, space] : roots) out.push_back(f);
    if (weights)
        for (const auto& [f, space] : *weights)
            if (!f.isZero() && !std::count(out.begin(), out.end(), f)) out.push_back(f);
    return out;
}

const Subspace* RestrictedRootSystem::rootSpace(const Functional& f) const {
    auto it = roots.find(f);
    return it == roots.end() ? nullptr : &it->second;
}

RestrictedRootSystem restrictedRoots(const LieAlgebra& l, const AbelianSubalgebra& a) {
    auto splits = splitPartsOfAdjoint(l, a);
    auto joint = jointGeneralizedEigenspaces(splits);

    RestrictedRootSystem sys{a, l.dim(), Subspace(l.dim()), {}, std::nullopt, false};
    std::size_t total = 0;
    for (auto& part : joint) {
        total += part.space.dim();
        Functional f(part.eigenvalue);
        if (f.isZero())
            sys.zeroSpace = std::move(part.space);
        else
            sys.roots.emplace(std::move(f), std::move(part.space));
    }
    if (total != l.dim())
        throw Error("Internal", "root decomposition is not complete");

    // negation symmetry (holds for semisimple input)
    sys.negationSymmetric = true;
    for (const auto& [f, space] : sys.roots) {
        auto it = sys.roots.find(-f);
        if (it == sys.roots.end() || it->second.dim() != space.dim()) {
            sys.negationSymmetric = false;
            break;
        }
    }

    // bracket grading [g_mu, g_nu] in g_{mu+nu} (or zero when mu+nu is not
    // a functional of the system)
    auto spaceOf = [&](const Functional& f) -> const Subspace* {
        if (f.isZero()) return &sys.zeroSpace;
        return sys.rootSpace(f);
    };
    std::vector<std::pair<Functional, const Subspace*>> parts;
    parts.push_back({Functional(QVector(a.rank(), Rational(0))), &sys.zeroSpace});
    for (const auto& [f, space] : sys.roots) parts.push_back({f, &space});
    for (const auto& [fa, sa] : parts)
        for (const auto& [fb, sb] : parts) {
            const Subspace* target = spaceOf(fa + fb);
            for (const auto& u : sa->basis())
                for (const auto& v : sb->basis()) {
                    QVector br = l.bracket(u, v);
                    if (target == nullptr) {
                        if (!isZeroVector(br))
                            throw Error("Internal", "bracket grading violated");
                    } else if (!target->contains(br)) {
                        throw Error("Internal", "bracket grading violated");
                    }
                }
        }
    return sys;
}

std::map<Functional, Subspace> restrictedWeights(const Representation& rho,
                                                 const AbelianSubalgebra& a) {
    std::vector<QMatrix> splits;
    for (const auto& z : a.generatorCoords())
        splits.push_back(jordanChevalley(rho.actionOf(z)).semisimplePart);
    auto joint = jointGeneralizedEigenspaces(splits);
    std::map<Functional, Subspace> weights;
    for (auto& part : joint) weights.emplace(Functional(part.eigenvalue), std::move(part.space));
    return weights;
}

void attachWeights(RestrictedRootSystem& sys, std::map<Functional, Subspace> weights) {
    std::size_t total = 0;
    for (const auto& [f, space] : weights) {
        if (f.rank() != sys.subalgebra.rank())
            throw DimensionMismatch("weight functional rank");
        total += space.dim();
    }
    if (!weights.empty() && total != weights.begin()->second.ambientDim())
        throw Error("Internal", "weight decomposition is not complete");
    sys.weights = std::move(weights);
}

std::vector<CoarseClass> coarseClasses(const RestrictedRootSystem& sys) {
    std::map<std::string, CoarseClass> classes;
    for (const auto& [f, space] : sys.roots) {
        std::string key = f.rayKeyString();
        auto [it, inserted] = classes.try_emplace(key);
        CoarseClass& cls = it->second;
        if (inserted) {
            cls.rayKey = key;
            cls.space = Subspace(sys.algebraDim);
        }
        cls.members.push_back(f);
        cls.space = cls.space.sum(space);
    }
    std::vector<CoarseClass> out;
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    return out;
}

std::optional<QVector> strictFeasibleWitness(const std::vector<QVector>& constraints,
                                             std::size_t dim) {
    if (dim == 0) return constraints.empty() ? std::optional<QVector>(QVector{}) : std::nullopt;

    std::set<QVector> seen;
    std::vector<QVector> cs;
    for (const auto& c : constraints) {
        if (c.size() != dim) throw DimensionMismatch("constraint length");
        if (isZeroVector(c)) return std::nullopt;   // 0 > 0
        QVector n = normalizedConstraint(c);
        if (seen.insert(n).second) cs.push_back(n);
    }

    if (dim == 1) {
        bool hasPos = false, hasNeg = false;
        for (const auto& c : cs) (c[0] > 0 ? hasPos : hasNeg) = true;
        if (hasPos && hasNeg) return std::nullopt;
        QVector w{Rational(hasNeg ? -1 : 1)};
        return w;
    }

    // eliminate the last variable
    std::vector<QVector> lowers, uppers, reduced;
    for (const auto& c : cs) {
        const Rational& ck = c[dim - 1];
        QVector rest(c.begin(), c.end() - 1);
        if (ck == 0) {
            reduced.push_back(std::move(rest));
        } else {
            // c' . x' + ck x_k > 0
            QVector bound(dim - 1);
            for (std::size_t i = 0; i + 1 < dim; ++i) bound[i] = -c[i] / ck;
            if (ck > 0)
                lowers.push_back(std::move(bound));   // x_k > bound . x'
            else
                uppers.push_back(std::move(bound));   // x_k < bound . x'
        }
    }
    for (const auto& lo : lowers)
        for (const auto& up : uppers) {
            QVector diff(dim - 1);
            bool zero = true;
            for (std::size_t i = 0; i + 1 < dim; ++i) {
                diff[i] = up[i] - lo[i];
                if (diff[i] != 0) zero = false;
            }
            if (zero) return std::nullopt;   // upper == lower, no strict room
            reduced.push_back(std::move(diff));
        }
    auto sub = strictFeasibleWitness(reduced, dim - 1);
    if (!sub) return std::nullopt;

    auto dot = [&](const QVector& a, const QVector& b) {
        Rational acc(0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
        return acc;
    };
    std::optional<Rational> lo, hi;
    for (const auto& l : lowers) {
        Rational v = dot(l, *sub);
        if (!lo || v > *lo) lo = v;
    }
    for (const auto& u : uppers) {
        Rational v = dot(u, *sub);
        if (!hi || v < *hi) hi = v;
    }
    Rational pick;
    if (lo && hi)
        pick = (*lo + *hi) / 2;
    else if (lo)
        pick = *lo + 1;
    else if (hi)
        pick = *hi - 1;
    else
        pick = 0;
    QVector w = *sub;
    w.push_back(pick);
    return w;
}

ChamberReport weylChambers(const RestrictedRootSystem& sys) {
    ChamberReport report;
    report.functionals = sys.nonzeroFunctionals();
    const std::size_t rank = sys.subalgebra.rank();
    if (rank == 0) throw DimensionMismatch("chambers need rank >= 1");

    // one representative per line {f, -f}
    std::vector<Functional> lines;
    {
        std::set<std::string> seen;
        for (const auto& f : report.functionals)
            if (seen.insert(f.lineKeyString()).second) lines.push_back(f);
    }

    std::vector<QVector> active;
    std::vector<int> signs(lines.size(), 0);
    auto dot = [&](const Functional& f, const QVector& x) {
        Rational acc(0);
        for (std::size_t i = 0; i < rank; ++i)
            if (f.coords()[i] != 0 && x[i] != 0) acc += f.coords()[i] * x[i];
        return acc;
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
        if (idx == lines.size()) {
            auto witness = strictFeasibleWitness(active, rank);
            if (!witness) return;
            std::vector<int> sv;
            for (const auto& f : report.functionals) {
                Rational v = dot(f, *witness);
                if (v == 0) throw Error("Internal", "chamber witness is not regular");
                sv.push_back(v > 0 ? 1 : -1);
            }
            report.witnesses.push_back(*witness);
            report.signVectors.push_back(std::move(sv));
            return;
        }
        for (int sign : {1, -1}) {
            QVector c = lines[idx].coords();
            if (sign < 0)
                for (auto& x : c) x = -x;
            active.push_back(std::move(c));
            if (strictFeasibleWitness(active, rank)) dfs(idx + 1);
            active.pop_back();
        }
    };
    dfs(0);
    return report;
}

DetectionReport detection(const RestrictedRootSystem& cartanSys, const AbelianSubalgebra& a,
                          const LieAlgebra& l) {
    if (!a.hasMatrices() || !cartanSys.subalgebra.hasMatrices())
        throw NotSupported("detection requires matrix-realized subalgebras");

    // Express the split part of each generator of `a` over the Cartan
    // generators (matrix level, basis free).
    std::vector<QVector> cartanFlat;
    for (const auto& h : cartanSys.subalgebra.generatorMatrices())
        cartanFlat.push_back(h.flatten());
    std::vector<QVector> coeffs;   // one coefficient vector per generator of a
    for (const auto& z : a.generatorMatrices()) {
        QMatrix split = jordanChevalley(z).semisimplePart;
        coeffs.push_back(coordsOverVectors(cartanFlat, split.flatten()));
    }

    DetectionReport report;
    report.allDetected = true;
    for (const auto& [root, space] : cartanSys.roots) {
        DetectionRow row;
        row.cartanRoot = root;
        QVector restriction(a.rank(), Rational(0));
        for (std::size_t gi = 0; gi < a.rank(); ++gi)
            for (std::size_t li = 0; li < root.rank(); ++li)
                if (coeffs[gi][li] != 0 && root.coords()[li] != 0)
                    restriction[gi] += coeffs[gi][li] * root.coords()[li];
        row.restriction = Functional(std::move(restriction));
        row.detected = !row.restriction.isZero();
        if (!row.detected) report.allDetected = false;

        row.label = root.str();
        if (space.dim() == 1 && l.hasRealization()) {
            QMatrix m = l.matrixOf(space.basis()[0]);
            std::size_t count = 0, pi = 0, pj = 0;
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (m(i, j) != 0) {
                        ++count;
                        pi = i;
                        pj = j;
                    }
            if (count == 1)
                row.label = "e" + std::to_string(pi + 1) + "-e" + std::to_string(pj + 1);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

QVector weylReflect(const QVector& sE, const QVector& rE) {
    if (sE.size() != rE.size()) throw DimensionMismatch("reflection coordinate size");
    Rational ss(0), sr(0);
    for (std::size_t i = 0; i < sE.size(); ++i) {
        ss += sE[i] * sE[i];
        sr += sE[i] * rE[i];
    }
    if (ss == 0) throw NotARoot("reflection about the zero vector");
    Rational f = 2 * sr / ss;
    QVector out = rE;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * sE[i];
    return out;
}

const SlRoot* SlCartanModel::rootByECoords(const QVector& e) const {
    for (const auto& r : roots)
        if (r.eCoords == e) return &r;
    return nullptr;
}

const SlRoot* SlCartanModel::rootByFunctional(const Functional& f) const {
    for (const auto& r : roots)
        if (r.onCartan == f) return &r;
    return nullptr;
}

SlCartanModel slCartanModel(std::size_t n) {
    SlCartanModel model;
    model.n = n;
    model.algebra = LieAlgebra::sl(n);
    const std::size_t dim = model.algebra.dim();
    std::vector<QVector> cartanCoords;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        QVector c(dim, Rational(0));
        c[n * (n - 1) + k] = 1;
        cartanCoords.push_back(std::move(c));
    }
    AbelianSubalgebra cartan(model.algebra, cartanCoords);
    model.system = restrictedRoots(model.algebra, cartan);
    model.cartan = model.system.subalgebra;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            SlRoot root;
            root.i = i;
            root.j = j;
            QVector e(n, Rational(0));
            e[i] = 1;
            e[j] = -1;
            root.eCoords = std::move(e);
            QVector onH(n - 1, Rational(0));
            for (std::size_t k = 0; k + 1 < n; ++k) {
                Rational hi = (i == k ? 1 : (i == k + 1 ? -1 : 0));
                Rational hj = (j == k ? 1 : (j == k + 1 ? -1 : 0));
                onH[k] = hi - hj;
            }
            root.onCartan = Functional(std::move(onH));
            root.label = "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1);
            if (model.system.roots.find(root.onCartan) == model.system.roots.end())
                throw Error("Internal", "sl(n) Cartan root missing from the computed system");
            model.roots.push_back(std::move(root));
        }
    return model;
}

std::vector<std::vector<std::size_t>> normalizerQuotient(const SlCartanModel& model,
                                                         const AbelianSubalgebra& a) {
    const std::size_t n = model.n;
    if (!a.hasMatrices()) throw NotSupported("normalizerQuotient needs generator matrices");
    std::vector<QVector> diags;
    for (const auto& z : a.generatorMatrices()) {
        QMatrix split = jordanChevalley(z).semisimplePart;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && split(i, j) != 0)
                    throw NotSupported("split part of a generator is not diagonal");
        QVector d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = split(i, i);
        diags.push_back(std::move(d));
    }
    Subspace v = Subspace::fromVectors(n, diags);

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::map<std::vector<std::string>, std::vector<std::size_t>> actions;
    do {
        bool preserves = true;
        std::vector<QVector> inducedCols;
        for (const auto& b : v.basis()) {
            QVector pb(n);
            for (std::size_t i = 0; i < n; ++i) pb[perm[i]] = b[i];
            auto coords = v.coordinatesOf(pb);
            if (!coords) {
                preserves = false;
                break;
            }
            inducedCols.push_back(*coords);
        }
        if (!preserves) continue;
        std::vector<std::string> key;
        for (const auto& col : inducedCols)
            for (const auto& x : col) key.push_back(toString(x));
        auto it = actions.find(key);
        if (it == actions.end() || perm < it->second) actions[key] = perm;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<std::size_t>> out;
    for (const auto& [key, rep] : actions) out.push_back(rep);
    std::sort(out.begin(), out.end());
    return out;
}

ConjugatorSearch findDetectingConjugator(const SlCartanModel& model,
                                         const DetectionReport& report, const SlRoot& r) {
    std::map<Functional, const DetectionRow*> byRoot;
    for (const auto& row : report.rows) byRoot[row.cartanRoot] = &row;
    auto rowOf = [&](const Functional& f) -> const DetectionRow* {
        auto it = byRoot.find(f);
        return it == byRoot.end() ? nullptr : it->second;
    };
    const DetectionRow* rRow = rowOf(r.onCartan);
    if (rRow == nullptr) throw NotARoot("root is not part of the detection report");

    ConjugatorSearch search;
    for (const auto& cand : model.roots) {
        const DetectionRow* candRow = rowOf(cand.onCartan);
        if (candRow == nullptr || !candRow->detected) continue;
        if (Functional::proportional(candRow->restriction, rRow->restriction)) continue;
        QVector imageE = weylReflect(cand.eCoords, r.eCoords);
        const SlRoot* image = model.rootByECoords(imageE);
        if (image == nullptr) continue;   // reflection stayed a root in A_{n-1}; defensive
        const DetectionRow* imageRow = rowOf(image->onCartan);
        if (imageRow == nullptr || !imageRow->detected) continue;
        search.witnesses.push_back({cand, *image});
    }
    return search;
}

RigidityReport rigidityReport(const LieAlgebra& l, const AbelianSubalgebra& a,
                              const RigidityOptions& options) {
    RestrictedRootSystem sys = restrictedRoots(l, a);
    RigidityReport report;

    // declared simple ideals, default: the whole algebra
    std::vector<Subspace> ideals;
    if (options.idealBlocks) {
        ideals = *options.idealBlocks;
        for (const auto& block : ideals) {
            if (block.ambientDim() != l.dim())
                throw DimensionMismatch("ideal block ambient dimension");
            for (std::size_t i = 0; i < l.dim(); ++i) {
                QVector ei(l.dim(), Rational(0));
                ei[i] = 1;
                for (const auto& b : block.basis())
                    if (!block.contains(l.bracket(ei, b)))
                        throw NotSupported("declared block is not an ideal");
            }
        }
    } else {
        ideals.push_back(Subspace::full(l.dim()));
    }

    report.genuinelyHigherRank = true;
    for (const auto& ideal : ideals) {
        std::vector<Functional> present;
        for (const auto& [f, space] : sys.roots)
            if (space.intersect(ideal).dim() > 0) present.push_back(f);
        bool twoIndependent = false;
        for (std::size_t i = 0; i < present.size() && !twoIndependent; ++i)
            for (std::size_t j = i + 1; j < present.size(); ++j)
                if (!Functional::proportional(present[i], present[j])) {
                    twoIndependent = true;
                    break;
                }
        if (!twoIndependent) report.genuinelyHigherRank = false;
    }

    // detection against the ambient Cartan (sl(n) realization only)
    std::optional<SlCartanModel> model;
    if (options.cartanModel)
        model = *options.cartanModel;
    else if (l.hasRealization() && !l.realization().empty()) {
        std::size_t n = l.realization()[0].rows();
        if (l.dim() == n * n - 1 && n >= 2) {
            bool traceless = true;
            for (const auto& m : l.realization())
                if (m.trace() != 0) traceless = false;
            if (traceless) model = slCartanModel(n);
        }
    }
    if (model && a.hasMatrices()) {
        DetectionReport det = detection(model->system, a, model->algebra);
        report.allRootsDetected = det.allDetected;
    }

    if (options.rho) {
        auto weights = restrictedWeights(*options.rho, a);
        bool zero = false;
        for (const auto& [f, space] : weights)
            if (f.isZero()) zero = true;
        report.zeroWeightPresent = zero;
        SymplecticClass sympl = classifySymplectic(*options.rho);
        report.symplecticContribution = sympl.symplectic;
        report.symplecticDimension = sympl.dimension;
        report.actionType = (sympl.symplectic && zero) ? ActionType::II : ActionType::I;
    } else {
        report.actionType = ActionType::I;
    }

    for (const auto& cls : coarseClasses(sys)) {
        bool semisimple = true;
        for (const auto& z : a.generatorCoords()) {
            QMatrix ad = l.adjoint(z);
            const auto& basis = cls.space.basis();
            QMatrix restricted(basis.size(), basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) {
                auto coords = cls.space.coordinatesOf(ad.applyTo(basis[i]));
                if (!coords)
                    throw Error("Internal", "coarse class is not ad-invariant");
                for (std::size_t j = 0; j < basis.size(); ++j) restricted(j, i) = (*coords)[j];
            }
            if (!isSemisimple(restricted)) semisimple = false;
        }
        report.semisimpleOnEachClass[cls.rayKey] = semisimple;
    }
    return report;
}

} // namespace rigidkit
