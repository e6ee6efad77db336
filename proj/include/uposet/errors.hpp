#pragma once

#include <stdexcept>
#include <string>

namespace uposet
{

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Generator pairs force u < u after transitive closure.
class CycleError : public Error
{
public:
	using Error::Error;
};

/// An input exceeds a configured size guard (enumeration, brute force, scans).
class LimitError : public Error
{
public:
	using Error::Error;
};

/// Materializing a set family would exceed the configured set-count cap.
class MemoryLimit : public Error
{
public:
	using Error::Error;
};

/// The poset has an antichain larger than the requested chain budget.
class InfeasibleError : public Error
{
public:
	using Error::Error;
};

class NotAnAntichain : public Error
{
public:
	using Error::Error;
};

/// Antichain too small for the labelled construction (needs at least 2).
class SizeError : public Error
{
public:
	using Error::Error;
};

/// Poset size does not match the universal family it is embedded into.
class SizeMismatch : public Error
{
public:
	using Error::Error;
};

/// Malformed text input.
class ParseError : public Error
{
public:
	using Error::Error;
};

/// An embedding produced by the library failed its own certificate check.
class VerificationError : public Error
{
public:
	using Error::Error;
};

} // namespace uposet
