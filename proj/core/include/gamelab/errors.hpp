#ifndef GAMELAB_ERRORS_HPP
#define GAMELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gamelab {

struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidProfile : GameError {
  using GameError::GameError;
};

struct ActionOutOfSpace : GameError {
  using GameError::GameError;
};

struct NonFiniteUtility : GameError {
  using GameError::GameError;
};

struct NotFiniteGame : GameError {
  using GameError::GameError;
};

struct ProductTooLarge : GameError {
  using GameError::GameError;
};

struct DegenerateStep : GameError {
  using GameError::GameError;
};

struct ScalabilityDomainError : GameError {
  using GameError::GameError;
};

struct InvalidSpec : GameError {
  using GameError::GameError;
};

struct ConfigError : GameError {
  using GameError::GameError;
};

}  // namespace gamelab

#endif  // GAMELAB_ERRORS_HPP
