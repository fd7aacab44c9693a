from verification.suite import CheckResult, VerificationReport, VerificationSuite

__all__ = ['CheckResult', 'VerificationReport', 'VerificationSuite']
