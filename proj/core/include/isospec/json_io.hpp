#pragma once

#include "isospec/brauer.hpp"
#include "isospec/commensurability.hpp"
#include "isospec/cyclic_symbols.hpp"
#include "isospec/int_polynomial.hpp"
#include "isospec/perm_group.hpp"
#include "isospec/place_universe.hpp"
#include "isospec/schreier.hpp"
#include "isospec/spectra.hpp"

#include <nlohmann/json.hpp>

namespace isospec {

/// JSON conventions, shared by the CLI and the library consumers:
///  - invariants are reduced fraction strings ("1/3"; "0" only never, zero
///    entries are simply absent);
///  - a Brauer class is {"invariants": {"<label>": "a/b", ...}};
///  - permutations are one-line image arrays ([1, 2, 0]);
///  - matrices are arrays of integer arrays; polynomial coefficients are
///    decimal strings in ascending degree order (they can exceed 2^63).
/// nlohmann::json keeps object keys sorted, so serialization is
/// byte-stable for equal values.

void to_json(nlohmann::json& j, const Place& place);
void from_json(const nlohmann::json& j, Place& place);

void to_json(nlohmann::json& j, const BrauerClass& c);
void from_json(const nlohmann::json& j, BrauerClass& c);

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

void to_json(nlohmann::json& j, const PlaceUniverse& u);
void from_json(const nlohmann::json& j, PlaceUniverse& u);

void to_json(nlohmann::json& j, const CommensurabilityVerdict& v);
void from_json(const nlohmann::json& j, CommensurabilityVerdict& v);

void to_json(nlohmann::json& j, const FamilyCertificate& cert);
void from_json(const nlohmann::json& j, FamilyCertificate& cert);

void to_json(nlohmann::json& j, const CertificateCheck& check);

void to_json(nlohmann::json& j, const HilbertTable& table);

void to_json(nlohmann::json& j, const PermGroup& g);
void from_json(const nlohmann::json& j, PermGroup& g);

void to_json(nlohmann::json& j, const GassmannReport& report);

void to_json(nlohmann::json& j, const SchreierGraph& graph);

void to_json(nlohmann::json& j, const IntPolynomial& p);
void from_json(const nlohmann::json& j, IntPolynomial& p);

void to_json(nlohmann::json& j, const IsoVerdict& v);

/// Adjacency matrices appear inside SchreierGraph JSON and stand-alone
/// graph files ({"adjacency": [[...]]}).
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// Reads a graph file: either a SchreierGraph emitted by the CLI or a bare
/// {"adjacency": ...} object. Only the adjacency matters downstream.
IntMatrix adjacency_from_json(const nlohmann::json& j);

/// Reads a subgroup file against a parent group: {"generators": [[...]]}
/// or {"generator_indices": [i, ...]} into the parent's generator list.
Subgroup subgroup_from_json(const PermGroup& parent, const nlohmann::json& j);

} // namespace isospec
