import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gqd_hamilton.settings')
django.setup()
