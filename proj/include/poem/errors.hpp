//
// PoemKit - Copyright 2026 PoemKit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace poem {

// Base class for all recoverable input/data errors. The CLI maps these to
// exit code 1; anything else escaping to main is an internal fault (exit 2).
class PoemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A molecule string that cannot be turned into a graph. Datasets drop such
// rows during cleaning instead of aborting the build.
class UnparsableMolecule : public PoemError {
 public:
  using PoemError::PoemError;
};

// Malformed input file (CSV, fingerprint file, library container).
class FormatError : public PoemError {
 public:
  using PoemError::PoemError;
};

// Fingerprint rows that cannot be aligned with dataset rows.
class KeyMismatch : public PoemError {
 public:
  using PoemError::PoemError;
};

// Fingerprints from different schemes (or lengths) used together.
class SchemeMismatch : public PoemError {
 public:
  using PoemError::PoemError;
};

// A molecule added twice with contradicting labels.
class ConflictingLabel : public PoemError {
 public:
  using PoemError::PoemError;
};

// Fewer than two usable rows after cleaning.
class EmptyDataset : public PoemError {
 public:
  using PoemError::PoemError;
};

// Library invariant violated at build time (M < 2, missing class, ...).
class InvalidLibrary : public PoemError {
 public:
  using PoemError::PoemError;
};

// A dataset row lacks an entry in a required external fingerprint file.
class MissingExternalFingerprint : public PoemError {
 public:
  using PoemError::PoemError;
};

// A split cannot place at least one molecule of every class on both sides.
class StratificationImpossible : public PoemError {
 public:
  using PoemError::PoemError;
};

// No cluster assignment satisfies the class-coverage restriction.
class ClassCoverageImpossible : public PoemError {
 public:
  using PoemError::PoemError;
};

// Scheme id not present in the library or roster.
class UnknownScheme : public PoemError {
 public:
  using PoemError::PoemError;
};

// ROC AUC requested with only one class present.
class SingleClass : public PoemError {
 public:
  using PoemError::PoemError;
};

// Paired vectors of different lengths.
class LengthMismatch : public PoemError {
 public:
  using PoemError::PoemError;
};

}  // namespace poem
