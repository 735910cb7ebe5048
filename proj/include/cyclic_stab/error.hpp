#pragma once
#include <stdexcept>
#include <string>

namespace cstab {

enum class Errc {
    RingMismatch,
    DimensionMismatch,
    NotAFactorization,
    NotEquivariant,
    NotClosed,
    UnsupportedArity,
    UnknownExample,
    BrokenChain,
    NotLiftable,
    NotConnective,
    NotSubdiagram,
    IdMismatch,
    ArrowSetMismatch,
    TrivialCharge,
    Inconsistent,
    NotLocallyLiftable,
    MaslovObstruction,
    InvalidTriple,
    NotDeformationEquivalent,
    NoFiltration,
    InvalidBridgeland,
    StepTooLarge,
    ChargeVanished,
    InexactEndpoint,
    LoopNotClosed,
    DocumentError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg);
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace cstab
