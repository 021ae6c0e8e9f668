/*
 * Copyright 2026 the bundleaudit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace bundleaudit {

enum class errc {
    ok = 0,
    truncated,
    malformed_header,
    unsafe_path,
    io_failure,
    unencodable_path,
    symlink_refused,
    not_found,
    unpacked_entry, // NotFound sub-code: entry stored outside the archive
    invalid_version,
    invalid_range,
    missing_root_manifest,
    malformed_db,
    duplicate_id,
    malformed_line,
    tag_not_found,
    provider_error,
    bind_failure,
    not_a_fixture,
    already_injected,
    payload_mismatch,
    malformed_package,
    network_error,
    usage_error,
};

const char* errc_name(errc code);

class AuditError : public std::runtime_error {
public:
    AuditError(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const { return code_; }

    // Byte offset of the first offending character, for parse errors.
    std::optional<std::size_t> offset;
    // Seconds until retry, when a provider supplied a rate-limit hint.
    std::optional<long> retry_after;

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, std::string message) {
    throw AuditError(code, std::move(message));
}

} // namespace bundleaudit
