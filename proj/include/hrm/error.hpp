#pragma once

#include <stdexcept>
#include <string>

namespace hrm {

// Broad failure families. The CLI maps these onto process exit codes.
enum class ErrorCategory { Config, Data, Training, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define HRM_DEFINE_ERROR(Name, Category)                          \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what)                        \
        : Error(ErrorCategory::Category, #Name ": " + what) {}    \
  };

HRM_DEFINE_ERROR(ConfigError, Config)
HRM_DEFINE_ERROR(DataError, Data)
HRM_DEFINE_ERROR(InsufficientWindow, Data)
HRM_DEFINE_ERROR(ChannelMismatch, Data)
HRM_DEFINE_ERROR(ClassTooSmall, Data)
HRM_DEFINE_ERROR(FormatError, Data)
HRM_DEFINE_ERROR(ManifestError, Data)
HRM_DEFINE_ERROR(SchemaError, Data)
HRM_DEFINE_ERROR(EmptyStudy, Data)
HRM_DEFINE_ERROR(GeometryError, Data)
HRM_DEFINE_ERROR(BundleError, Config)
HRM_DEFINE_ERROR(UninitializedStatistics, Training)
HRM_DEFINE_ERROR(IoError, Io)

#undef HRM_DEFINE_ERROR

// Process exit codes used by the command line tool.
inline int exit_code_for(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Config: return 2;
    case ErrorCategory::Data: return 3;
    case ErrorCategory::Training: return 4;
    case ErrorCategory::Io: return 5;
  }
  return 1;
}

}  // namespace hrm
