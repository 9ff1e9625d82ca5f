// Copyright 2026 The alggraph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALGGRAPH_ERROR_HPP_
#define ALGGRAPH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace alggraph {

  enum class ErrorKind {
    non_idempotent,
    malformed_table,
    duplicate_operation,
    not_a_congruence,
    signature_mismatch,
    cap_exceeded,
    not_subdirect,
    clone_truncated,
    not_found_within_cap,
    search_exhausted,
    filter_starvation,
    precondition,
    parse,
    io
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
  };

  inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::non_idempotent: return "NonIdempotent";
      case ErrorKind::malformed_table: return "MalformedTable";
      case ErrorKind::duplicate_operation: return "DuplicateOperation";
      case ErrorKind::not_a_congruence: return "NotACongruence";
      case ErrorKind::signature_mismatch: return "SignatureMismatch";
      case ErrorKind::cap_exceeded: return "CapExceeded";
      case ErrorKind::not_subdirect: return "NotSubdirect";
      case ErrorKind::clone_truncated: return "CloneTruncated";
      case ErrorKind::not_found_within_cap: return "NotFoundWithinCap";
      case ErrorKind::search_exhausted: return "SearchExhausted";
      case ErrorKind::filter_starvation: return "FilterStarvation";
      case ErrorKind::precondition: return "PreconditionViolated";
      case ErrorKind::parse: return "ParseError";
      case ErrorKind::io: return "IOError";
    }
    return "Unknown";
  }

}  // namespace alggraph

#endif  // ALGGRAPH_ERROR_HPP_
