#pragma once

#include <stdexcept>

namespace chaingroup {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Forest construction and parsing.
class ParseError : public Error { public: using Error::Error; };
class LabelOutOfRange : public Error { public: using Error::Error; };
class DuplicateEdge : public Error { public: using Error::Error; };
class SelfLoop : public Error { public: using Error::Error; };
class CycleDetected : public Error { public: using Error::Error; };
class NotASubgraph : public Error { public: using Error::Error; };
class InvalidSpec : public Error { public: using Error::Error; };

// Permutation arithmetic.
class SizeMismatch : public Error { public: using Error::Error; };
class PointOutOfRange : public Error { public: using Error::Error; };
class RepeatedPoint : public Error { public: using Error::Error; };

// Group classification.
class NotAbelian : public Error { public: using Error::Error; };
class CapExceeded : public Error { public: using Error::Error; };

// Census and verification harness.
class UnknownTheorem : public Error { public: using Error::Error; };
class LimitExceeded : public Error { public: using Error::Error; };

} // namespace chaingroup
