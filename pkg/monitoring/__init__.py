from monitoring.metrics import *
