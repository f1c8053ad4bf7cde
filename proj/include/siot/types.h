// Copyright 2026 The SIoT Trust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIOT_TYPES_H_
#define SIOT_TYPES_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace siot {

// Identifies an object (device/node) in the network. Totally ordered so that
// every container keyed by it iterates deterministically.
struct ObjectId {
  std::uint32_t value = 0;

  constexpr ObjectId() = default;
  constexpr explicit ObjectId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(ObjectId, ObjectId) = default;
};

inline std::ostream& operator<<(std::ostream& os, ObjectId id) {
  return os << id.value;
}

inline std::string ToString(ObjectId id) { return std::to_string(id.value); }

using CommunityId = std::uint32_t;
using GroupId = std::uint32_t;

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed in arguments that violate an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An object id that is not part of the network.
class UnknownObject : public Error {
 public:
  explicit UnknownObject(ObjectId id)
      : Error("unknown object id " + ToString(id)), id_(id) {}
  ObjectId id() const { return id_; }

 private:
  ObjectId id_;
};

}  // namespace siot

template <>
struct std::hash<siot::ObjectId> {
  std::size_t operator()(siot::ObjectId id) const noexcept {
    return std::hash<std::uint32_t>()(id.value);
  }
};

#endif  // SIOT_TYPES_H_
