#pragma once

namespace osgt {

/// IEEE-754 double scalar. Finite unless an operation documents +-inf as a
/// saturation value.
using Real = double;

/// Natural log of a probability, in nats; range (-inf, 0].
using LogProb = double;

}  // namespace osgt
