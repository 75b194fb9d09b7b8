#pragma once

#include <stdexcept>

namespace mfecsa {

// Invalid hyperparameter or experiment configuration.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed caller input (dimension mismatch, non-finite values, bad action).
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation not legal in the current state (e.g. stepping a finished episode).
class StateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Corrupt or unparseable serialized data; the message names the byte offset
// or line number where decoding failed.
class FormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure (unwritable directory, unreadable file).
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mfecsa
