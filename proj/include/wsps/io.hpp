#pragma once

#include <charconv>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "wsps/errors.hpp"
#include "wsps/job.hpp"
#include "wsps/numeric.hpp"
#include "wsps/schedule.hpp"

namespace wsps {

// Instance document:  {"jobs": [{"id": "a", "p": 1, "w": 1}, ...]}
//
// Schedule document:  {"algorithm": "keyseq",
//                      "objective": 7.5,
//                      "certificate": 13.0,              // optional
//                      "shared": [{"id": "a", "start": 0, "end": 0.5}, ...],
//                      "private_completions": [{"id": "a", "end": 0.5}, ...]}
//
// Doubles are emitted with shortest round-trip precision, so parse(emit(x))
// reproduces x bit for bit.

struct SharedInterval {
    std::string id;
    double start = 0.0;
    double end = 0.0;
};

struct PrivateCompletion {
    std::string id;
    double end = 0.0;
};

struct ScheduleFile {
    std::string algorithm;
    double objective = 0.0;
    std::optional<double> certificate;
    std::vector<SharedInterval> shared;
    std::vector<PrivateCompletion> private_completions;
};

namespace detail {

// Emission is hand-streamed: building a DOM for million-job instances costs
// more than solving them. std::to_chars keeps doubles at shortest
// round-trip precision.
inline void append_json_string(std::string& out, std::string_view s) {
    out += '"';
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

inline void append_number(std::string& out, double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, result.ptr);
}

inline double number_field(const nlohmann::json& obj, const char* field,
                           const std::string& where) {
    if (!obj.contains(field) || !obj[field].is_number()) {
        throw ParseError(where + ": missing or non-numeric field \"" + field + "\"");
    }
    return obj[field].get<double>();
}

inline std::string string_field(const nlohmann::json& obj, const char* field,
                                const std::string& where) {
    if (!obj.contains(field) || !obj[field].is_string()) {
        throw ParseError(where + ": missing or non-string field \"" + field + "\"");
    }
    return obj[field].get<std::string>();
}

inline nlohmann::json parse_document(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

// Streaming reader for instance documents. A DOM over a million-job file
// costs multiples of the solve itself, so the jobs array is consumed
// event by event. Accepts the same documents as a DOM walk would: a
// top-level object whose "jobs" member is an array of {id, p, w} objects;
// unknown members anywhere are skipped.
class InstanceSax {
public:
    using json = nlohmann::json;

    std::vector<Job> take_jobs() {
        if (!saw_jobs_array_) {
            throw ParseError("instance: expected an object with a \"jobs\" array");
        }
        return std::move(jobs_);
    }

    bool null() { return on_scalar(); }
    bool boolean(bool) { return on_scalar(); }
    bool number_integer(json::number_integer_t v) { return on_number(static_cast<double>(v)); }
    bool number_unsigned(json::number_unsigned_t v) { return on_number(static_cast<double>(v)); }
    bool number_float(json::number_float_t v, const json::string_t&) { return on_number(v); }
    bool string(json::string_t& v) {
        if (skip_depth_ == 0 && state_ == State::JobValue && field_ == Field::Id) {
            current_.id = std::move(v);
            has_id_ = true;
            state_ = State::InJob;
            return true;
        }
        return on_scalar();
    }
    bool binary(json::binary_t&) { return on_scalar(); }

    bool start_object(std::size_t) {
        if (skip_depth_ > 0) {
            ++skip_depth_;
            return true;
        }
        switch (state_) {
            case State::Root:
                state_ = State::TopLevel;
                return true;
            case State::InJobs:
                state_ = State::InJob;
                current_ = Job{};
                has_id_ = has_p_ = has_w_ = false;
                return true;
            case State::TopValue:
                state_ = State::TopLevel;  // nested object under an unknown key
                skip_depth_ = 1;
                return true;
            case State::JobValue:
                if (field_ == Field::Other) {
                    state_ = State::InJob;
                    skip_depth_ = 1;
                    return true;
                }
                fail_field();
                return false;
            default:
                throw ParseError("instance: expected an object with a \"jobs\" array");
        }
    }

    bool key(json::string_t& name) {
        if (skip_depth_ > 0) return true;
        if (state_ == State::TopLevel) {
            if (name == "jobs") {
                state_ = State::ExpectJobsArray;
            } else {
                state_ = State::TopValue;
            }
            return true;
        }
        if (state_ == State::InJob) {
            if (name == "id") {
                field_ = Field::Id;
            } else if (name == "p") {
                field_ = Field::P;
            } else if (name == "w") {
                field_ = Field::W;
            } else {
                field_ = Field::Other;
            }
            state_ = State::JobValue;
            return true;
        }
        return true;
    }

    bool end_object() {
        if (skip_depth_ > 0) {
            --skip_depth_;
            return true;
        }
        if (state_ == State::InJob) {
            const std::string where = "jobs[" + std::to_string(jobs_.size()) + "]";
            if (!has_id_) throw ParseError(where + ": missing or non-string field \"id\"");
            if (!has_p_) throw ParseError(where + ": missing or non-numeric field \"p\"");
            if (!has_w_) throw ParseError(where + ": missing or non-numeric field \"w\"");
            jobs_.push_back(std::move(current_));
            state_ = State::InJobs;
            return true;
        }
        state_ = State::Done;
        return true;
    }

    bool start_array(std::size_t) {
        if (skip_depth_ > 0) {
            ++skip_depth_;
            return true;
        }
        if (state_ == State::ExpectJobsArray) {
            state_ = State::InJobs;
            saw_jobs_array_ = true;
            jobs_.clear();  // were a document to repeat "jobs", the last one wins
            return true;
        }
        if (state_ == State::TopValue) {
            state_ = State::TopLevel;
            skip_depth_ = 1;
            return true;
        }
        if (state_ == State::JobValue) {
            if (field_ == Field::Other) {
                state_ = State::InJob;
                skip_depth_ = 1;
                return true;
            }
            fail_field();
            return false;
        }
        if (state_ == State::InJobs) {
            throw ParseError("jobs[" + std::to_string(jobs_.size()) + "]: expected an object");
        }
        throw ParseError("instance: expected an object with a \"jobs\" array");
    }

    bool end_array() {
        if (skip_depth_ > 0) {
            --skip_depth_;
            return true;
        }
        if (state_ == State::InJobs) {
            state_ = State::TopLevel;
        }
        return true;
    }

    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
        throw ParseError(std::string("instance: ") + ex.what());
    }

private:
    enum class State { Root, TopLevel, TopValue, ExpectJobsArray, InJobs, InJob, JobValue, Done };
    enum class Field { Id, P, W, Other };

    bool on_number(double value) {
        if (skip_depth_ == 0 && state_ == State::JobValue) {
            switch (field_) {
                case Field::P:
                    current_.p = value;
                    has_p_ = true;
                    break;
                case Field::W:
                    current_.w = value;
                    has_w_ = true;
                    break;
                case Field::Id:
                    fail_field();
                    return false;
                case Field::Other:
                    break;
            }
            state_ = State::InJob;
            return true;
        }
        return on_scalar();
    }

    bool on_scalar() {
        if (skip_depth_ > 0) return true;
        switch (state_) {
            case State::JobValue:
                if (field_ == Field::Other) {
                    state_ = State::InJob;
                    return true;
                }
                fail_field();
                return false;
            case State::TopValue:
                state_ = State::TopLevel;
                return true;
            case State::InJobs:
                throw ParseError("jobs[" + std::to_string(jobs_.size()) +
                                 "]: expected an object");
            case State::ExpectJobsArray:
            case State::Root:
                throw ParseError("instance: expected an object with a \"jobs\" array");
            default:
                return true;
        }
    }

    [[noreturn]] void fail_field() {
        const std::string where = "jobs[" + std::to_string(jobs_.size()) + "]";
        if (field_ == Field::Id) {
            throw ParseError(where + ": missing or non-string field \"id\"");
        }
        throw ParseError(where + ": missing or non-numeric field \"" +
                         (field_ == Field::P ? "p" : "w") + "\"");
    }

    std::vector<Job> jobs_;
    Job current_;
    State state_ = State::Root;
    Field field_ = Field::Other;
    std::size_t skip_depth_ = 0;
    bool saw_jobs_array_ = false;
    bool has_id_ = false;
    bool has_p_ = false;
    bool has_w_ = false;
};

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
    detail::InstanceSax handler;
    nlohmann::json::sax_parse(text, &handler);
    return normalize_instance(handler.take_jobs());
}

inline std::string emit_instance(const Instance& instance) {
    std::string out;
    out.reserve(instance.size() * 48 + 32);
    out += "{\n  \"jobs\": [";
    bool first = true;
    for (const Job& job : instance.jobs()) {
        out += first ? "\n    " : ",\n    ";
        first = false;
        out += "{\"id\": ";
        detail::append_json_string(out, job.id);
        out += ", \"p\": ";
        detail::append_number(out, job.p);
        out += ", \"w\": ";
        detail::append_number(out, job.w);
        out += '}';
    }
    out += instance.empty() ? "]\n}" : "\n  ]\n}";
    return out;
}

// Serializes a schedule against its instance. Scheduled jobs complete
// privately when they complete on the shared processor; everything else runs
// to its full length privately.
inline std::string emit_schedule(const Instance& instance, const SyncSchedule& schedule,
                                 const std::string& algorithm,
                                 std::optional<double> certificate = std::nullopt) {
    std::unordered_map<std::string, double> shared_completion;
    shared_completion.reserve(schedule.size());

    std::string out;
    out.reserve(schedule.size() * 72 + instance.size() * 48 + 128);
    out += "{\n  \"algorithm\": ";
    detail::append_json_string(out, algorithm);
    out += ",\n  \"objective\": ";
    detail::append_number(out, schedule.objective);
    if (certificate) {
        out += ",\n  \"certificate\": ";
        detail::append_number(out, *certificate);
    }
    out += ",\n  \"shared\": [";
    bool first = true;
    for (const ScheduleEntry& entry : schedule.entries) {
        shared_completion.emplace(entry.id, entry.completion);
        out += first ? "\n    " : ",\n    ";
        first = false;
        out += "{\"id\": ";
        detail::append_json_string(out, entry.id);
        out += ", \"start\": ";
        detail::append_number(out, entry.start);
        out += ", \"end\": ";
        detail::append_number(out, entry.completion);
        out += '}';
    }
    out += schedule.empty() ? "],\n  \"private_completions\": [" : "\n  ],\n  \"private_completions\": [";
    first = true;
    for (const Job& job : instance.jobs()) {
        const auto it = shared_completion.find(job.id);
        const double end = it != shared_completion.end() ? it->second : job.p;
        out += first ? "\n    " : ",\n    ";
        first = false;
        out += "{\"id\": ";
        detail::append_json_string(out, job.id);
        out += ", \"end\": ";
        detail::append_number(out, end);
        out += '}';
    }
    out += instance.empty() ? "]\n}" : "\n  ]\n}";
    return out;
}

inline ScheduleFile parse_schedule(const std::string& text) {
    const nlohmann::json doc = detail::parse_document(text, "schedule");
    if (!doc.is_object()) {
        throw ParseError("schedule: expected an object");
    }
    ScheduleFile file;
    file.algorithm = detail::string_field(doc, "algorithm", "schedule");
    file.objective = detail::number_field(doc, "objective", "schedule");
    if (doc.contains("certificate")) {
        if (!doc["certificate"].is_number()) {
            throw ParseError("schedule: non-numeric \"certificate\"");
        }
        file.certificate = doc["certificate"].get<double>();
    }
    if (!doc.contains("shared") || !doc["shared"].is_array()) {
        throw ParseError("schedule: missing \"shared\" array");
    }
    std::size_t index = 0;
    for (const auto& item : doc["shared"]) {
        const std::string where = "shared[" + std::to_string(index++) + "]";
        file.shared.push_back({detail::string_field(item, "id", where),
                               detail::number_field(item, "start", where),
                               detail::number_field(item, "end", where)});
    }
    if (!doc.contains("private_completions") || !doc["private_completions"].is_array()) {
        throw ParseError("schedule: missing \"private_completions\" array");
    }
    index = 0;
    for (const auto& item : doc["private_completions"]) {
        const std::string where = "private_completions[" + std::to_string(index++) + "]";
        file.private_completions.push_back({detail::string_field(item, "id", where),
                                            detail::number_field(item, "end", where)});
    }
    return file;
}

// Reconstructs the synchronized schedule a ScheduleFile describes, taking
// processing times and weights from the instance. Unknown ids keep the
// file's interval and surface later as validation violations.
inline SyncSchedule schedule_from_file(const Instance& instance, const ScheduleFile& file) {
    std::unordered_map<std::string, std::size_t> position;
    position.reserve(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) {
        position.emplace(instance[i].id, i);
    }
    SyncSchedule schedule;
    schedule.objective = file.objective;
    schedule.entries.reserve(file.shared.size());
    for (const SharedInterval& interval : file.shared) {
        ScheduleEntry entry{interval.id, 0.0, 0.0, interval.start, interval.end};
        auto it = position.find(interval.id);
        if (it != position.end()) {
            entry.p = instance[it->second].p;
            entry.w = instance[it->second].w;
        }
        schedule.entries.push_back(std::move(entry));
    }
    return schedule;
}

// Full file-level check: the reconstructed schedule must satisfy every
// synchronized-schedule invariant, scheduled jobs must complete privately at
// their shared completion, and unscheduled jobs at their processing time.
inline std::vector<Violation> validate_schedule_file(const Instance& instance,
                                                     const ScheduleFile& file) {
    const SyncSchedule schedule = schedule_from_file(instance, file);
    std::vector<Violation> violations = validate_schedule(instance, schedule);

    std::unordered_map<std::string, double> expected_private;
    expected_private.reserve(instance.size());
    for (const Job& job : instance.jobs()) {
        expected_private.emplace(job.id, job.p);
    }
    for (const ScheduleEntry& entry : schedule.entries) {
        auto it = expected_private.find(entry.id);
        if (it != expected_private.end()) {
            it->second = entry.completion;
        }
    }
    std::unordered_map<std::string, int> seen;
    for (const PrivateCompletion& row : file.private_completions) {
        auto it = expected_private.find(row.id);
        if (it == expected_private.end()) {
            violations.push_back({ViolationKind::UnknownJob, row.id,
                                  "private completion for a job not in the instance"});
            continue;
        }
        if (++seen[row.id] == 2) {
            violations.push_back({ViolationKind::DuplicateJob, row.id,
                                  "repeated private completion"});
            continue;
        }
        if (!approx_equal(row.end, it->second)) {
            violations.push_back({ViolationKind::Desync, row.id,
                                  "private completion " + std::to_string(row.end) +
                                      " != expected " + std::to_string(it->second)});
        }
    }
    for (const Job& job : instance.jobs()) {
        if (seen.find(job.id) == seen.end()) {
            violations.push_back({ViolationKind::Desync, job.id,
                                  "missing private completion"});
        }
    }
    return violations;
}

}  // namespace wsps
