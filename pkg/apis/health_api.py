"""
🏥 Health Check API - نظام مراقبة صحة النظام
"""

import platform
import sys
from datetime import datetime, timezone

import numpy as np
import psutil
import scipy
from flask import Blueprint, current_app, jsonify

from utils.response_helpers import success_response

# Create blueprint
health_bp = Blueprint('health', __name__, url_prefix='/api/health')


@health_bp.route('', methods=['GET'])
@health_bp.route('/', methods=['GET'])
def health_check():
    """
    GET /api/health
    Process status, library versions and configured limits
    """
    process = psutil.Process()
    memory = process.memory_info()
    status = 'healthy'
    if psutil.virtual_memory().percent > 90:
        status = 'degraded'

    return jsonify(success_response({
        'status': status,
        'timestamp': datetime.now(timezone.utc).isoformat(),
        'system_info': {
            'platform': platform.system(),
            'python_version': f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}",
            'numpy_version': np.__version__,
            'scipy_version': scipy.__version__,
        },
        'performance': {
            'rss_mb': round(memory.rss / (1024 ** 2), 2),
            'cpu_count': psutil.cpu_count() or 1,
        },
        'limits': {
            'max_m': current_app.config['MAX_M'],
            'oracle_k_limit': current_app.config['ORACLE_K_LIMIT'],
            'orbit_cap': current_app.config['ORBIT_CAP'],
        },
    }))
