#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wsps {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A job parameter (processing time or weight) is negative or not finite.
class NegativeParameter : public Error {
public:
    using Error::Error;
};

// Two jobs carry the same id.
class DuplicateId : public Error {
public:
    explicit DuplicateId(std::string job_id)
        : Error("duplicate job id: " + job_id), job_id_(std::move(job_id)) {}
    const std::string& job_id() const noexcept { return job_id_; }

private:
    std::string job_id_;
};

// An order refers to a job the instance does not contain.
class UnknownJob : public Error {
public:
    explicit UnknownJob(std::string job_id)
        : Error("unknown job: " + job_id), job_id_(std::move(job_id)) {}
    const std::string& job_id() const noexcept { return job_id_; }

private:
    std::string job_id_;
};

// Placing this job would give it a start at or after its processing time,
// leaving nothing to run on the shared processor.
class InfeasiblePermutation : public Error {
public:
    explicit InfeasiblePermutation(std::string job_id)
        : Error("infeasible permutation at job: " + job_id), job_id_(std::move(job_id)) {}
    const std::string& job_id() const noexcept { return job_id_; }

private:
    std::string job_id_;
};

class EmptySchedule : public Error {
public:
    using Error::Error;
};

class EmptyInstance : public Error {
public:
    using Error::Error;
};

class NotAntithetical : public Error {
public:
    using Error::Error;
};

class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class BadParameters : public Error {
public:
    using Error::Error;
};

}  // namespace wsps
